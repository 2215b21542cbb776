//! JSON renderings of core values; every rational becomes a reduced string.

use serde_json::{json, Value};

use nillift_core::classify::{
    AnticommutingPair, CertificateReason, ComplexWitness, IdealCertificate, IdealKind,
    NonDivisionEvidence, QuaternionWitness,
};
use nillift_core::{
    Algebra, ClassifyOutcome, Element, Finding, Frobenius, Rational, Subspace, Witness,
};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn coords(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

/// `3/2*e12 - x + 1`-style text in the algebra's basis names.
pub fn expr(alg: &Algebra, e: &Element) -> String {
    let mut out = String::new();
    for (name, c) in alg.basis_names().iter().zip(e.coords()) {
        if num::Zero::is_zero(c) {
            continue;
        }
        let negative = num::Signed::is_negative(c);
        let mag = if negative { -c } else { c.clone() };
        let term = if name == "1" {
            mag.to_string()
        } else if num::One::is_one(&mag) {
            name.clone()
        } else {
            format!("{mag}*{name}")
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element(alg: &Algebra, e: &Element) -> Value {
    json!({ "coords": coords(e.coords()), "expr": expr(alg, e) })
}

pub fn subspace(alg: &Algebra, s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": alg.subspace_elements(s).iter().map(|e| element(alg, e)).collect::<Vec<_>>(),
    })
}

fn complex(alg: &Algebra, w: &ComplexWitness) -> Value {
    json!({
        "type": "complex",
        "element": element(alg, &w.element),
        "minimal_polynomial": w.minimal_polynomial.to_string(),
        "squarefree_part": w.squarefree_part.to_string(),
        "sturm_sequence": w.sturm_sequence.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "real_root_count": w.real_root_count,
        "verified": w.verify(alg),
    })
}

fn quaternion(alg: &Algebra, w: &QuaternionWitness) -> Value {
    json!({
        "type": "quaternion",
        "a": element(alg, &w.a),
        "b": element(alg, &w.b),
        "lambda": rational(&w.lambda),
        "mu": rational(&w.mu),
        "verified": w.verify(alg),
    })
}

fn anticommuting(alg: &Algebra, p: &AnticommutingPair) -> Value {
    json!({
        "type": "anticommuting",
        "u": element(alg, &p.u),
        "v": element(alg, &p.v),
        "u_inverse": element(alg, &p.u_inverse),
        "v_inverse": element(alg, &p.v_inverse),
        "u_squared": element(alg, &alg.square(&p.u)),
        "v_squared": element(alg, &alg.square(&p.v)),
        "verified": p.verify(alg),
    })
}

pub fn certificate(alg: &Algebra, c: &IdealCertificate) -> Value {
    json!({
        "kind": match c.kind {
            IdealKind::Left => "left",
            IdealKind::TwoSided => "two-sided",
        },
        "reason": match c.reason {
            CertificateReason::OddDimension => "odd dimension",
            CertificateReason::NotMultipleOfFour => "dimension not a multiple of 4",
        },
        "dim": c.dim,
        "generators": c.generators.iter().map(|e| element(alg, e)).collect::<Vec<_>>(),
        "ideal": subspace(alg, &c.subspace),
        "verified": c.verify(alg),
    })
}

pub fn witness(alg: &Algebra, w: &Witness) -> Value {
    match w {
        Witness::Complex(w) => complex(alg, w),
        Witness::Quaternion(w) => quaternion(alg, w),
        Witness::Anticommuting(p) => anticommuting(alg, p),
    }
}

pub fn outcome(alg: &Algebra, o: &ClassifyOutcome) -> Value {
    let mut v = json!({
        "variant": o.variant(),
        "budget_used": o.budget_used,
    });
    match &o.finding {
        Finding::Witness(w) => v["witness"] = witness(alg, w),
        Finding::Certificate(c) => v["certificate"] = certificate(alg, c),
        Finding::Unknown => {}
    }
    v
}

pub fn frobenius(alg: &Algebra, f: &Frobenius) -> Value {
    let mut v = json!({ "class": f.label(), "verified": f.verify(alg) });
    match f {
        Frobenius::Real => {}
        Frobenius::Complex { lambda, a } => {
            v["lambda"] = rational(lambda);
            v["a"] = element(alg, a);
        }
        Frobenius::Quaternion { lambda, mu, basis } => {
            v["lambda"] = rational(lambda);
            v["mu"] = rational(mu);
            v["basis"] = Value::Array(basis.iter().map(|e| element(alg, e)).collect());
        }
        Frobenius::NotRealDivision(e) => v["evidence"] = evidence(alg, e),
    }
    v
}

fn evidence(alg: &Algebra, e: &NonDivisionEvidence) -> Value {
    match e {
        NonDivisionEvidence::RealRoot {
            element: x,
            minimal_polynomial,
            real_roots,
        } => json!({
            "type": "real root",
            "element": element(alg, x),
            "minimal_polynomial": minimal_polynomial.to_string(),
            "real_roots": real_roots,
        }),
        NonDivisionEvidence::DegreeAboveTwo {
            element: x,
            minimal_polynomial,
        } => json!({
            "type": "minimal polynomial of degree above 2",
            "element": element(alg, x),
            "minimal_polynomial": minimal_polynomial.to_string(),
        }),
        NonDivisionEvidence::Dimension { dim } => json!({ "type": "dimension", "dim": dim }),
        NonDivisionEvidence::TrivialAnticommutant { element: x } => json!({
            "type": "trivial anticommutant",
            "element": element(alg, x),
        }),
        NonDivisionEvidence::NonScalarSquare { element: x, square } => json!({
            "type": "non-scalar square",
            "element": element(alg, x),
            "square": element(alg, square),
        }),
        NonDivisionEvidence::DependentBasis => json!({ "type": "dependent basis" }),
    }
}
