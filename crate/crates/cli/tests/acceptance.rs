//! Acceptance suite: one PASS/FAIL line per criterion, exact checks only.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nillift_cli::run;
use nillift_core::classify::{
    find_anticommuting_pair, find_complex_witness, find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate, find_quaternion_witness, real_root_count,
    sample_left_ideal_dims, sample_two_sided_ideal_dims, NonDivisionEvidence, QuaternionWitness,
    Witness,
};
use nillift_core::lifting::{idempotent_iterates, verify_quaternion_lift};
use nillift_core::poly::{squarefree_part, sturm_count};
use nillift_core::rational::{frac, int};
use nillift_core::{
    frobenius_classify, hensel_lift, inseparable_witness, lift_idempotent,
    quaternion_lift_feasibility, radical, Algebra, CatalogSpec, Element, Feasibility, Frobenius,
    LiftError, Poly, Rational, Search, Subspace,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

/// Coefficient algebra, the imaginary unit's index and `-square`, and the
/// triangular sizes to tensor with.
type Family = (Option<&'static str>, Option<(usize, i64)>, Vec<usize>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn build(spec: &str) -> Algebra {
    CatalogSpec::parse(spec)
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
        .build()
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn in_ideal(i: &Subspace, e: &Element) -> bool {
    i.contains(e.coords()).unwrap()
}

fn ceil_log2(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

fn random_in(alg: &Algebra, s: &Subspace, rng: &mut ChaCha8Rng) -> Element {
    alg.subspace_elements(s).iter().fold(alg.zero(), |acc, v| {
        &acc + &v.scale(&int(rng.gen_range(-3..=3)))
    })
}

/// `C (x) Tri(n)` together with the coordinates of `c (x) e_kk`.
struct Composite {
    alg: Algebra,
    rad: Subspace,
    nu: usize,
    coeff_dim: usize,
    tri_dim: usize,
    diagonal: Vec<usize>,
}

impl Composite {
    fn new(coeff: Option<&str>, n: usize) -> Self {
        let tri = build(&format!("Tri({n})"));
        let (alg, coeff_dim) = match coeff {
            None => (tri.clone(), 1),
            Some(c) => {
                let c = build(c);
                (Algebra::tensor_product(&c, &tri), c.dim())
            }
        };
        let diagonal = (1..=n)
            .map(|k| {
                tri.basis_names()
                    .iter()
                    .position(|s| *s == format!("e{k}{k}"))
                    .unwrap()
            })
            .collect();
        let report = radical(&alg).unwrap();
        Composite {
            rad: report.radical,
            nu: report.nilpotency_index,
            alg,
            coeff_dim,
            tri_dim: tri.dim(),
            diagonal,
        }
    }

    /// `sum_k c_k (x) e_kk` for coefficient coordinate vectors `c_k`.
    fn diag(&self, entries: &[Vec<Rational>]) -> Element {
        let mut coords = vec![int(0); self.alg.dim()];
        for (k, c) in entries.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                coords[i * self.tri_dim + self.diagonal[k]] = x.clone();
            }
        }
        Element::new(coords)
    }
}

/// A factor of `f` with the coefficient-algebra coordinates of one root.
struct Factor {
    poly: Poly,
    root: Vec<Rational>,
}

/// `X - r`, or `(X + p/2)^2 + c^2 d` with root `-p/2 + c w` where `w^2 = -d`.
fn random_factor(
    rng: &mut ChaCha8Rng,
    coeff_dim: usize,
    imaginary: Option<(usize, i64)>,
) -> Factor {
    let mut root = vec![int(0); coeff_dim];
    match imaginary {
        Some((w, d)) if rng.gen_bool(0.5) => {
            let half_p = frac(rng.gen_range(-6..=6), 2);
            let c = frac(rng.gen_range(1..=4), rng.gen_range(1..=2));
            root[0] = -half_p.clone();
            root[w] = c.clone();
            let poly = Poly::new(vec![
                &half_p * &half_p + &c * &c * int(d),
                &half_p * int(2),
                int(1),
            ]);
            Factor { poly, root }
        }
        _ => {
            let r = frac(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            root[0] = r.clone();
            Factor {
                poly: Poly::linear_root(&r),
                root,
            }
        }
    }
}

fn criterion_1() -> Check {
    let families: Vec<Family> = vec![
        (None, None, vec![2, 3, 4, 5, 6]),
        (Some("Cneg(-1)"), Some((1, 1)), vec![2, 3, 4]),
        (Some("Cneg(-2)"), Some((1, 2)), vec![2, 3]),
        (Some("Cneg(-7)"), Some((1, 7)), vec![2, 3]),
        (Some("Quat(-1,-1)"), Some((1, 1)), vec![2, 3]),
    ];
    let mut pool = Vec::new();
    for (coeff, imag, sizes) in &families {
        for &n in sizes {
            pool.push((Composite::new(*coeff, n), *imag));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for case in 0..200 {
        let (comp, imag) = &pool[case % pool.len()];
        let alg = &comp.alg;
        let count = rng.gen_range(1..=3);
        let mut factors: Vec<Factor> = Vec::new();
        while factors.len() < count {
            let f = random_factor(&mut rng, comp.coeff_dim, *imag);
            if factors.iter().all(|g| g.poly != f.poly) {
                factors.push(f);
            }
        }
        let f = factors.iter().fold(Poly::one(), |acc, g| &acc * &g.poly);
        let roots: Vec<Vec<Rational>> = comp
            .diagonal
            .iter()
            .map(|_| factors[rng.gen_range(0..factors.len())].root.clone())
            .collect();
        let exact = comp.diag(&roots);
        ensure!(
            alg.eval_poly(&f, &exact).is_zero(),
            "case {case}: constructed root is wrong"
        );
        let b = &exact + &random_in(alg, &comp.rad, &mut rng);
        let r = hensel_lift(alg, &comp.rad, &b, &f)
            .map_err(|e| format!("case {case} on {}: {e}", alg.name()))?;
        ensure!(
            alg.eval_poly(&f, &r.lifted).is_zero(),
            "case {case}: f(a) != 0"
        );
        ensure!(
            in_ideal(&comp.rad, &(&r.lifted - &b)),
            "case {case}: a - b not in I"
        );
        ensure!(
            r.iterations <= ceil_log2(comp.nu),
            "case {case}: {} iterations, nu = {}",
            r.iterations,
            comp.nu
        );
    }
    Ok(())
}

fn criterion_2() -> Check {
    let pool: Vec<Composite> = [
        (None, 2),
        (None, 3),
        (None, 4),
        (None, 5),
        (Some("Cneg(-1)"), 3),
        (Some("Quat(-1,-1)"), 2),
    ]
    .into_iter()
    .map(|(c, n)| Composite::new(c, n))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let x2_x = Poly::from_i64(&[0, -1, 1]);
    for case in 0..50 {
        let comp = &pool[case % pool.len()];
        let alg = &comp.alg;
        let bits: Vec<Vec<Rational>> = comp
            .diagonal
            .iter()
            .map(|_| {
                let mut c = vec![int(0); comp.coeff_dim];
                c[0] = int(rng.gen_range(0..=1));
                c
            })
            .collect();
        let b = &comp.diag(&bits) + &random_in(alg, &comp.rad, &mut rng);
        let hensel =
            hensel_lift(alg, &comp.rad, &b, &x2_x).map_err(|e| format!("case {case}: {e}"))?;
        let iterates =
            idempotent_iterates(alg, &comp.rad, &b).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(hensel.iterates == iterates, "case {case}: iterates differ");
        let e = lift_idempotent(alg, &comp.rad, &b).map_err(|e| format!("case {case}: {e}"))?;
        ensure!(
            alg.square(&e) == e && e == hensel.lifted,
            "case {case}: idempotent mismatch"
        );
        for w in iterates.windows(2) {
            let c2 = alg.square(&w[0]);
            let c3 = alg.mul(&c2, &w[0]);
            ensure!(
                w[1] == &c2.scale(&int(3)) - &c3.scale(&int(2)),
                "case {case}: step is not 3c^2 - 2c^3"
            );
        }
    }
    let t2 = build("Tri(2)");
    let rad = radical(&t2).unwrap().radical;
    let e =
        lift_idempotent(&t2, &rad, &Element::from_i64(&[1, 1, 1])).map_err(|e| e.to_string())?;
    ensure!(e == Element::from_i64(&[1, 0, 1]), "Tri(2) lift is {e:?}");
    ensure!(e == t2.one(), "Tri(2) lift is not the identity");
    Ok(())
}

fn criterion_3() -> Check {
    let cases = [
        (Poly::from_i64(&[1, -2, 1]), 1),
        (Poly::from_i64(&[0, 0, -1, 1]), 0),
        (Poly::from_i64(&[2, -3, 0, 1]), 1),
    ];
    for (f, root) in cases {
        let w = inseparable_witness(&f, &int(root)).map_err(|e| format!("{f}: {e}"))?;
        let a = &w.algebra;
        let fb = a.eval_poly(&f, &w.element);
        ensure!(fb == w.residue, "{f}: residue mismatch");
        ensure!(!fb.is_zero(), "{f}: f(b) = 0");
        ensure!(in_ideal(&w.ideal, &fb), "{f}: f(b) not in I");
        for y in a.subspace_elements(&w.ideal) {
            for c in [int(1), int(-2), frac(1, 3)] {
                let shifted = &w.element + &y.scale(&c);
                ensure!(a.eval_poly(&f, &shifted) == fb, "{f}: f(b + y) != f(b)");
            }
        }
        ensure!(w.verify(), "{f}: witness verify() failed");
        ensure!(
            matches!(
                hensel_lift(a, &w.ideal, &w.element, &f),
                Err(LiftError::NotSeparable { .. })
            ),
            "{f}: hensel_lift did not report NotSeparable"
        );
    }
    Ok(())
}

fn composites(count: usize, seed: u64) -> Vec<Algebra> {
    let pieces = [
        "Q",
        "Cneg(-1)",
        "Cneg(-2)",
        "Cneg(3)",
        "Mat(Q,2)",
        "Tri(2)",
        "Quat(-1,-1)",
        "Trunc(2)",
        "Trunc(3)",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a = pieces[rng.gen_range(0..pieces.len())];
        let b = pieces[rng.gen_range(0..pieces.len())];
        let spec = match rng.gen_range(0..3) {
            0 => a.to_string(),
            1 => format!("Prod({a},{b})"),
            _ => format!("Tensor({a},{b})"),
        };
        let alg = build(&spec);
        if alg.dim() > 12 {
            continue;
        }
        out.push(alg.scramble_basis(rng.gen()).0);
    }
    out
}

fn criterion_4() -> Check {
    let search = Search::new(300, 0);
    for spec in [
        "Mat(Q,2)",
        "Cneg(-1)",
        "Mat(Cneg(-1),1)",
        "Mat(Cneg(-1),2)",
        "Quat(-1,-1)",
    ] {
        let alg = build(spec);
        let out = find_complex_witness(&alg, search);
        match out.witness() {
            Some(Witness::Complex(w)) => {
                ensure!(w.verify(&alg), "{spec}: witness does not verify");
                ensure!(
                    real_root_count(&alg, &w.element) == 0,
                    "{spec}: witness has a real root"
                );
            }
            _ => return Err(format!("{spec}: no complex witness")),
        }
    }
    for (spec, dim) in [("Mat(Q,3)", 3), ("Prod(Q,Mat(Q,2))", 1), ("Tri(2)", 1)] {
        let alg = build(spec);
        let out = find_odd_left_ideal_certificate(&alg, search);
        let c = out
            .certificate()
            .ok_or_else(|| format!("{spec}: no certificate"))?;
        ensure!(c.verify(&alg) && c.dim % 2 == 1, "{spec}: bad certificate");
        ensure!(alg.is_left_ideal(&c.subspace), "{spec}: not a left ideal");
        ensure!(
            c.dim == dim,
            "{spec}: certificate dim {} (expected {dim})",
            c.dim
        );
    }
    let quick = Search::new(60, 3);
    for alg in composites(50, 4) {
        let w = find_complex_witness(&alg, quick);
        let c = find_odd_left_ideal_certificate(&alg, quick);
        ensure!(
            !(w.is_witness() && c.is_certificate()),
            "{}: witness and odd certificate coexist",
            alg.name()
        );
    }
    Ok(())
}

fn criterion_5() -> Check {
    let search = Search::new(300, 0);
    for spec in ["Quat(-1,-1)", "Mat(Cneg(-1),2)"] {
        let alg = build(spec);
        match find_quaternion_witness(&alg, search).witness() {
            Some(Witness::Quaternion(w)) => {
                ensure!(w.verify(&alg), "{spec}: witness does not verify")
            }
            _ => return Err(format!("{spec}: no quaternion witness")),
        }
        let dims = sample_left_ideal_dims(&alg, 100, 5);
        ensure!(
            dims.len() == 100,
            "{spec}: only {} ideals sampled",
            dims.len()
        );
        ensure!(
            dims.iter().all(|d| d % 4 == 0),
            "{spec}: left ideal dims {dims:?}"
        );
    }
    for (spec, dim) in [("Mat(Q,2)", 2), ("Tri(2)", 1)] {
        let alg = build(spec);
        let out = find_left_ideal_mod4_certificate(&alg, search);
        let c = out
            .certificate()
            .ok_or_else(|| format!("{spec}: no certificate"))?;
        ensure!(
            c.verify(&alg) && c.dim % 4 != 0 && c.dim == dim,
            "{spec}: bad certificate"
        );
    }
    Ok(())
}

fn criterion_6() -> Check {
    let m2 = build("Mat(Q,2)");
    let out = find_anticommuting_pair(&m2, Search::new(300, 0));
    let Some(Witness::Anticommuting(p)) = out.witness() else {
        return Err("no anticommuting pair on M2".into());
    };
    ensure!(p.verify(&m2), "pair does not verify");
    ensure!(m2.anticommutator(&p.u, &p.v).is_zero(), "u o v != 0");
    ensure!(
        m2.mul(&p.u, &p.u_inverse) == m2.one() && m2.mul(&p.v, &p.v_inverse) == m2.one(),
        "inverses"
    );
    ensure!(m2.square(&p.u) == m2.scalar(&int(-1)), "u^2 != -1");
    ensure!(m2.square(&p.v) == m2.one(), "v^2 != 1");
    ensure!(m2.pow(&p.v, 4) == m2.one(), "v^4 != 1");
    let dims = sample_two_sided_ideal_dims(&m2, 100, 6);
    ensure!(
        !dims.is_empty() && dims.iter().all(|d| *d == 0 || *d == 4),
        "two-sided dims {dims:?}"
    );
    Ok(())
}

fn criterion_7() -> Check {
    let (q, _) = build("Q").scramble_basis(11);
    ensure!(frobenius_classify(&q) == Frobenius::Real, "scrambled Q");
    for d in [1, 2, 7] {
        let (c, _) = build(&format!("Cneg(-{d})")).scramble_basis(20 + d as u64);
        let f = frobenius_classify(&c);
        ensure!(
            f.label() == format!("C({d})") && f.verify(&c),
            "Cneg(-{d}): {}",
            f.label()
        );
    }
    for a in [-1, -2, -3] {
        for b in [-1, -2, -3] {
            let spec = format!("Quat({a},{b})");
            let (h, _) = build(&spec).scramble_basis((30 - a * 3 - b) as u64);
            let f = frobenius_classify(&h);
            let Frobenius::Quaternion { lambda, mu, basis } = &f else {
                return Err(format!("{spec}: {}", f.label()));
            };
            ensure!(f.verify(&h), "{spec}: basis does not verify");
            let [one, x, y, xy] = basis;
            ensure!(*one == h.one(), "{spec}: first basis vector is not 1");
            ensure!(
                h.square(x) == h.scalar(&-lambda) && h.square(y) == h.scalar(&-mu),
                "{spec}: squares"
            );
            ensure!(
                h.anticommutator(x, y).is_zero() && *xy == h.mul(x, y),
                "{spec}: anticommutation"
            );
        }
    }
    for spec in ["Cneg(2)", "Mat(Q,2)"] {
        let alg = build(spec);
        match frobenius_classify(&alg) {
            Frobenius::NotRealDivision(NonDivisionEvidence::RealRoot {
                element,
                minimal_polynomial,
                real_roots,
            }) => {
                ensure!(real_roots >= 1, "{spec}: no real roots");
                ensure!(
                    alg.minimal_polynomial(&element) == minimal_polynomial,
                    "{spec}: evidence polynomial"
                );
                let sqf = squarefree_part(&minimal_polynomial).unwrap();
                ensure!(
                    sturm_count(&sqf).unwrap() == real_roots,
                    "{spec}: Sturm count"
                );
            }
            other => return Err(format!("{spec}: {}", other.label())),
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let specs = [
        "Tri(2)",
        "Tri(5)",
        "Prod(Tri(2),Prod(Q,Q))",
        "Tensor(Tri(2),Tri(2))",
        "Prod(Q,Prod(Q,Q))",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for spec in specs {
        let alg = build(spec);
        ensure!(alg.dim() % 2 == 1, "{spec} has even dimension");
        for _ in 0..100 {
            let coords: Vec<i64> = (0..alg.dim()).map(|_| rng.gen_range(-4..=4)).collect();
            let a = Element::from_i64(&coords);
            let mu = alg.minimal_polynomial(&a);
            let count = sturm_count(&squarefree_part(&mu).unwrap()).unwrap();
            ensure!(count >= 1, "{spec}: {coords:?} has no real eigenvalue");
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let j = build("ExampleJ");
    ensure!(j.validate().is_ok(), "ExampleJ does not validate");
    ensure!(j.dim() == 8, "dim {}", j.dim());
    let rad = radical(&j).map_err(|e| e.to_string())?;
    ensure!(
        rad.radical.dim() == 4 && rad.nilpotency_index == 2,
        "radical dim {} nu {}",
        rad.radical.dim(),
        rad.nilpotency_index
    );
    let (quotient, _) = j.quotient(&rad.radical).map_err(|e| e.to_string())?;
    match find_quaternion_witness(&quotient, Search::new(300, 0)).witness() {
        Some(Witness::Quaternion(w)) => {
            ensure!(w.verify(&quotient), "A/rad witness does not verify")
        }
        _ => return Err("A/rad has no quaternion pair".into()),
    }
    let name = |s: &str| j.named(s).unwrap();
    let (x, y) = (name("x"), name("y"));
    let w = j.commutator(&y, &x).scale(&frac(1, 2));
    let complement = QuaternionWitness {
        a: x.clone(),
        b: w,
        lambda: int(1),
        mu: int(1),
    };
    ensure!(complement.verify(&j), "complement pair does not verify");
    let feasibility =
        quaternion_lift_feasibility(&j, &rad.radical, &x, &y).map_err(|e| e.to_string())?;
    match feasibility {
        Feasibility::Feasible { u, v, a, b } => {
            let minus_one = j.scalar(&int(-1));
            ensure!(
                j.square(&a) == minus_one && j.square(&b) == minus_one,
                "squares"
            );
            ensure!(j.anticommutator(&a, &b).is_zero(), "a o b != 0");
            ensure!(
                in_ideal(&rad.radical, &(&a - &x)) && in_ideal(&rad.radical, &(&b - &y)),
                "not lifts"
            );
            ensure!(
                verify_quaternion_lift(&j, &rad.radical, &x, &y, &u, &v),
                "lift check"
            );
        }
        Feasibility::Infeasible {
            coefficient_rank,
            augmented_rank,
            ..
        } => ensure!(
            augmented_rank > coefficient_rank,
            "infeasibility not certified"
        ),
    }
    Ok(())
}

fn criterion_10() -> Check {
    let f = Poly::from_i64(&[1, 0, 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 2..=4 {
        let alg = build(&format!("Tri({n},Cneg(-1))"));
        let rad = radical(&alg).map_err(|e| e.to_string())?;
        ensure!(
            rad.radical.dim() == n * (n - 1),
            "Tri({n},Cneg(-1)): radical dim {}",
            rad.radical.dim()
        );
        let u_one = (1..=n).fold(alg.zero(), |acc, k| {
            &acc + &alg.named(&format!("e{k}{k}*u")).unwrap()
        });
        for _ in 0..5 {
            let b = &u_one + &random_in(&alg, &rad.radical, &mut rng);
            let r = hensel_lift(&alg, &rad.radical, &b, &f).map_err(|e| e.to_string())?;
            ensure!(alg.square(&r.lifted) == alg.scalar(&int(-1)), "a^2 != -1");
            ensure!(
                in_ideal(&rad.radical, &(&r.lifted - &b)),
                "a - b not in rad"
            );
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).display().to_string();
    let mut commands: Vec<Vec<String>> = Vec::new();
    let owned = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    for (file, spec) in [
        ("h.json", vec!["Quat", "-1", "-1"]),
        ("m2.json", vec!["Mat", "Q", "2"]),
        ("m3.json", vec!["Mat", "Q", "3"]),
        ("t2.json", vec!["Tri", "2"]),
        ("j.json", vec!["ExampleJ"]),
    ] {
        let mut c = owned(&["--json", "catalog"]);
        c.extend(owned(&spec));
        c.extend(["--out".to_string(), path(file)]);
        commands.push(c);
    }
    for file in ["h.json", "m2.json", "m3.json", "t2.json", "j.json"] {
        commands.push(vec!["--json".into(), "validate".into(), path(file)]);
        for property in ["complex", "quaternion", "anticommuting", "frobenius"] {
            for seed in ["0", "17"] {
                commands.push(vec![
                    "--json".into(),
                    "classify".into(),
                    path(file),
                    "--property".into(),
                    property.into(),
                    "--budget".into(),
                    "120".into(),
                    "--seed".into(),
                    seed.into(),
                ]);
            }
        }
    }
    commands.push(vec![
        "--json".into(),
        "lift".into(),
        path("t2.json"),
        "--poly".into(),
        "X^2-X".into(),
        "--element".into(),
        "1,1,1".into(),
    ]);
    for demo in nillift_cli::DEMOS {
        commands.push(owned(&["--json", "demo", demo]));
    }
    for c in &commands {
        let first = run(c.clone());
        let file_bytes = if c[1] == "catalog" {
            std::fs::read(c.last().unwrap()).ok()
        } else {
            None
        };
        let second = run(c.clone());
        ensure!(first == second, "{c:?}: reports differ between runs");
        ensure!(
            first.stdout.starts_with('{'),
            "{c:?}: no JSON report (exit {})",
            first.code
        );
        if let Some(bytes) = file_bytes {
            ensure!(
                std::fs::read(c.last().unwrap()).ok() == Some(bytes),
                "{c:?}: file differs"
            );
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("Hensel property suite (200 cases)", criterion_1),
        (
            "idempotent lift equals Newton on X^2 - X (50 cases)",
            criterion_2,
        ),
        ("inseparable polynomials admit no lift", criterion_3),
        (
            "complex witnesses and odd left ideal certificates",
            criterion_4,
        ),
        ("quaternion witnesses and mod-4 certificates", criterion_5),
        ("anticommuting invertible pair on M2(Q)", criterion_6),
        ("Frobenius classifier", criterion_7),
        ("odd dimension forces a real eigenvalue", criterion_8),
        ("ExampleJ suite", criterion_9),
        (
            "lifting X^2 + 1 over triangular Cneg(-1) algebras",
            criterion_10,
        ),
        ("determinism of seeded reports", criterion_11),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let ms = t.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({ms} ms)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {e} ({ms} ms)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
