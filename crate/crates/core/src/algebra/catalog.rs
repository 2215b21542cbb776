//! Named algebras.
//!
//! A [`CatalogSpec`] is written `Name` or `Name(arg, ...)`:
//!
//! | spec              | algebra                                             |
//! |-------------------|-----------------------------------------------------|
//! | `Q`               | the rationals                                       |
//! | `Cneg(q)`         | `Q[u]/(u^2 - q)`, basis `1, u`; `q != 0`            |
//! | `Quat(a,b)`       | quaternion algebra `i^2 = a, j^2 = b, ij = -ji = k` |
//! | `Mat(B,n)`        | `n x n` matrices over `B`                           |
//! | `Tri(n)`          | upper triangular `n x n` rational matrices          |
//! | `Tri(n,B)`        | upper triangular `n x n` matrices over `B`          |
//! | `Trunc(k)`        | `Q[eps]/(eps^k)`                                    |
//! | `Prod(A,B,...)`   | direct product                                      |
//! | `Tensor(A,B)`     | tensor product over `Q`                             |
//! | `ExampleJ`        | the 8-dimensional algebra described below           |
//!
//! `ExampleJ` is `Q<x, y>` modulo `x^2 + 1`, `y^2 + 1` and every
//! `(x o y) f (x o y)`. Writing `z = xy` and `t = xy + yx`, the element `t` is
//! central with `t^2 = 0`, and `1, x, y, z, t, tx, ty, tz` is a basis.

use std::fmt;

use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{Algebra, AlgebraError};
use crate::rational::{int, parse_lenient, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog algebra {0:?}")]
    UnknownName(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("catalog spec syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    Q,
    Cneg(Rational),
    Quat(Rational, Rational),
    Mat(Box<CatalogSpec>, usize),
    Tri(usize, Box<CatalogSpec>),
    Trunc(usize),
    Prod(Vec<CatalogSpec>),
    Tensor(Box<CatalogSpec>, Box<CatalogSpec>),
    ExampleJ,
}

impl CatalogSpec {
    pub fn cneg(q: i64) -> Self {
        CatalogSpec::Cneg(int(q))
    }

    pub fn quaternion(a: i64, b: i64) -> Self {
        CatalogSpec::Quat(int(a), int(b))
    }

    pub fn matrix(inner: CatalogSpec, n: usize) -> Self {
        CatalogSpec::Mat(Box::new(inner), n)
    }

    pub fn triangular(n: usize) -> Self {
        CatalogSpec::Tri(n, Box::new(CatalogSpec::Q))
    }

    pub fn triangular_over(inner: CatalogSpec, n: usize) -> Self {
        CatalogSpec::Tri(n, Box::new(inner))
    }

    pub fn product(parts: Vec<CatalogSpec>) -> Self {
        CatalogSpec::Prod(parts)
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut p = SpecParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let arg = p.arg()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        match arg {
            Arg::Spec(s) => Ok(s),
            Arg::Number(_) => Err(p.error("expected an algebra name")),
        }
    }

    /// Builds and validates the presentation. The algebra's name is the
    /// canonical spelling of the catalog name.
    pub fn build(&self) -> Result<Algebra, CatalogError> {
        let bad = |reason: &str| CatalogError::BadParams {
            name: self.to_string(),
            reason: reason.to_string(),
        };
        let alg = match self {
            CatalogSpec::Q => {
                Algebra::from_products("Q", vec!["1".into()], vec![int(1)], |_, _| vec![int(1)])?
            }
            CatalogSpec::Cneg(q) => {
                if q.is_zero() {
                    return Err(bad("u^2 must be a nonzero rational"));
                }
                Algebra::from_products(
                    "",
                    vec!["1".into(), "u".into()],
                    vec![int(1), int(0)],
                    |i, j| match (i, j) {
                        (0, k) | (k, 0) => unit_vec(2, k),
                        _ => vec![q.clone(), int(0)],
                    },
                )?
            }
            CatalogSpec::Quat(a, b) => {
                if a.is_zero() || b.is_zero() {
                    return Err(bad("quaternion parameters must be nonzero"));
                }
                quaternion_algebra(a, b)?
            }
            CatalogSpec::Mat(inner, n) => {
                if *n == 0 {
                    return Err(bad("matrix size must be positive"));
                }
                Algebra::matrix_algebra(&inner.build()?, *n)
            }
            CatalogSpec::Tri(n, inner) => {
                if *n == 0 {
                    return Err(bad("matrix size must be positive"));
                }
                Algebra::triangular_over(&inner.build()?, *n)
            }
            CatalogSpec::Trunc(k) => {
                if *k == 0 {
                    return Err(bad("truncation order must be positive"));
                }
                let k = *k;
                let names = (0..k)
                    .map(|p| match p {
                        0 => "1".to_string(),
                        1 => "eps".to_string(),
                        p => format!("eps^{p}"),
                    })
                    .collect();
                Algebra::from_products("", names, unit_vec(k, 0), |i, j| {
                    if i + j < k {
                        unit_vec(k, i + j)
                    } else {
                        vec![int(0); k]
                    }
                })?
            }
            CatalogSpec::Prod(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| bad("need at least one factor"))?;
                let mut acc = first.build()?;
                for p in it {
                    acc = Algebra::direct_product(&acc, &p.build()?);
                }
                acc
            }
            CatalogSpec::Tensor(a, b) => Algebra::tensor_product(&a.build()?, &b.build()?),
            CatalogSpec::ExampleJ => example_j()?,
        };
        Ok(alg.with_name(self.to_string()))
    }
}

fn unit_vec(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k] = Rational::one();
    v
}

fn quaternion_algebra(a: &Rational, b: &Rational) -> Result<Algebra, AlgebraError> {
    let ab = a * b;
    // entries (coefficient, basis index) of e_i e_j for i, j in {i, j, k}
    let table = |i: usize, j: usize| -> (Rational, usize) {
        match (i, j) {
            (1, 1) => (a.clone(), 0),
            (1, 2) => (int(1), 3),
            (1, 3) => (a.clone(), 2),
            (2, 1) => (int(-1), 3),
            (2, 2) => (b.clone(), 0),
            (2, 3) => (-b.clone(), 1),
            (3, 1) => (-a.clone(), 2),
            (3, 2) => (b.clone(), 1),
            (3, 3) => (-ab.clone(), 0),
            _ => unreachable!(),
        }
    };
    Algebra::from_products(
        "",
        ["1", "i", "j", "k"].map(String::from).to_vec(),
        unit_vec(4, 0),
        |i, j| match (i, j) {
            (0, k) | (k, 0) => unit_vec(4, k),
            _ => {
                let (c, k) = table(i, j);
                let mut v = vec![Rational::zero(); 4];
                v[k] = c;
                v
            }
        },
    )
}

/// Products of `1, x, y, z` with `z = xy`, as (plain part, t part).
fn example_j_word_product(a: usize, b: usize) -> ([i64; 4], [i64; 4]) {
    match (a, b) {
        (0, k) | (k, 0) => {
            let mut v = [0; 4];
            v[k] = 1;
            (v, [0; 4])
        }
        (1, 1) => ([-1, 0, 0, 0], [0; 4]),
        (1, 2) => ([0, 0, 0, 1], [0; 4]),
        (1, 3) => ([0, 0, -1, 0], [0; 4]),
        (2, 1) => ([0, 0, 0, -1], [1, 0, 0, 0]),
        (2, 2) => ([-1, 0, 0, 0], [0; 4]),
        (2, 3) => ([0, 1, 0, 0], [0, 0, 1, 0]),
        (3, 1) => ([0, 0, 1, 0], [0, 1, 0, 0]),
        (3, 2) => ([0, -1, 0, 0], [0; 4]),
        (3, 3) => ([-1, 0, 0, 0], [0, 0, 0, 1]),
        _ => unreachable!(),
    }
}

fn example_j() -> Result<Algebra, AlgebraError> {
    let names = ["1", "x", "y", "z", "t", "tx", "ty", "tz"]
        .map(String::from)
        .to_vec();
    Algebra::from_products("", names, unit_vec(8, 0), |i, j| {
        let (ti, wi) = (i / 4, i % 4);
        let (tj, wj) = (j / 4, j % 4);
        let (plain, with_t) = example_j_word_product(wi, wj);
        let mut v = vec![Rational::zero(); 8];
        match ti + tj {
            0 => {
                for k in 0..4 {
                    v[k] = int(plain[k]);
                    v[4 + k] = int(with_t[k]);
                }
            }
            1 => {
                for k in 0..4 {
                    v[4 + k] = int(plain[k]);
                }
            }
            _ => {}
        }
        v
    })
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Q => write!(f, "Q"),
            CatalogSpec::Cneg(q) => write!(f, "Cneg({q})"),
            CatalogSpec::Quat(a, b) => write!(f, "Quat({a},{b})"),
            CatalogSpec::Mat(inner, n) => write!(f, "Mat({inner},{n})"),
            CatalogSpec::Tri(n, inner) if **inner == CatalogSpec::Q => write!(f, "Tri({n})"),
            CatalogSpec::Tri(n, inner) => write!(f, "Tri({n},{inner})"),
            CatalogSpec::Trunc(k) => write!(f, "Trunc({k})"),
            CatalogSpec::Prod(parts) => {
                write!(f, "Prod(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            CatalogSpec::Tensor(a, b) => write!(f, "Tensor({a},{b})"),
            CatalogSpec::ExampleJ => write!(f, "ExampleJ"),
        }
    }
}

enum Arg {
    Spec(CatalogSpec),
    Number(Rational),
}

struct SpecParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, message: &str) -> CatalogError {
        CatalogError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> String {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|&b| pred(b)) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn arg(&mut self) -> Result<Arg, CatalogError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_digit() || *b == b'-' || *b == b'+' => {
                let start = self.pos;
                if *b == b'+' {
                    self.pos += 1;
                }
                let text = self.take_while(|b| b.is_ascii_digit() || b == b'-' || b == b'/');
                parse_lenient(&text)
                    .map(Arg::Number)
                    .map_err(|e| CatalogError::Syntax {
                        position: start,
                        message: e.to_string(),
                    })
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.take_while(|b| b.is_ascii_alphanumeric());
                self.skip_ws();
                let mut args = Vec::new();
                if self.bytes.get(self.pos) == Some(&b'(') {
                    self.pos += 1;
                    loop {
                        args.push(self.arg()?);
                        self.skip_ws();
                        match self.bytes.get(self.pos) {
                            Some(b',') => self.pos += 1,
                            Some(b')') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return Err(self.error("expected ',' or ')'")),
                        }
                    }
                }
                build_spec(&name, args).map(Arg::Spec).map_err(|e| match e {
                    CatalogError::Syntax { message, .. } => CatalogError::Syntax {
                        position: start,
                        message,
                    },
                    other => other,
                })
            }
            _ => Err(self.error("expected a name or a number")),
        }
    }
}

fn build_spec(name: &str, args: Vec<Arg>) -> Result<CatalogSpec, CatalogError> {
    let bad = |reason: &str| CatalogError::BadParams {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    let number = |a: &Arg| match a {
        Arg::Number(r) => Ok(r.clone()),
        Arg::Spec(_) => Err(bad("expected a number")),
    };
    let count = |a: &Arg| -> Result<usize, CatalogError> {
        let r = number(a)?;
        if !r.is_integer() || !r.is_positive() {
            return Err(bad("expected a positive integer"));
        }
        r.to_integer()
            .to_usize()
            .ok_or_else(|| bad("size too large"))
    };
    let spec = |a: Arg| match a {
        Arg::Spec(s) => Ok(s),
        Arg::Number(_) => Err(bad("expected an algebra")),
    };
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(bad(&format!("expected {n} parameters, got {}", args.len())))
        }
    };
    Ok(match name {
        "Q" => {
            arity(0)?;
            CatalogSpec::Q
        }
        "Cneg" => {
            arity(1)?;
            CatalogSpec::Cneg(number(&args[0])?)
        }
        "Quat" => {
            arity(2)?;
            CatalogSpec::Quat(number(&args[0])?, number(&args[1])?)
        }
        "Mat" => {
            arity(2)?;
            let n = count(&args[1])?;
            let mut it = args.into_iter();
            CatalogSpec::Mat(Box::new(spec(it.next().expect("arity"))?), n)
        }
        "Tri" => match args.len() {
            1 => CatalogSpec::Tri(count(&args[0])?, Box::new(CatalogSpec::Q)),
            2 => {
                let n = count(&args[0])?;
                let inner = spec(args.into_iter().nth(1).expect("arity"))?;
                CatalogSpec::Tri(n, Box::new(inner))
            }
            _ => return Err(bad("expected Tri(n) or Tri(n,B)")),
        },
        "Trunc" => {
            arity(1)?;
            CatalogSpec::Trunc(count(&args[0])?)
        }
        "Prod" => {
            if args.is_empty() {
                return Err(bad("expected at least one factor"));
            }
            CatalogSpec::Prod(args.into_iter().map(spec).collect::<Result<_, _>>()?)
        }
        "Tensor" => {
            arity(2)?;
            let mut it = args.into_iter();
            let a = spec(it.next().expect("arity"))?;
            let b = spec(it.next().expect("arity"))?;
            CatalogSpec::Tensor(Box::new(a), Box::new(b))
        }
        "ExampleJ" => {
            arity(0)?;
            CatalogSpec::ExampleJ
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    })
}
