//! Exact characteristic polynomials and certified real roots.
//!
//! Independent of the Jacobi path: the characteristic polynomial of an
//! integer matrix comes from the Faddeev–LeVerrier recurrence in exact
//! integer arithmetic, its square-free factorisation from Yun's algorithm
//! over the rationals, and each root is isolated with a Sturm sequence and
//! then bisected on sign changes at dyadic points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SymMatrix;
use crate::error::{invalid, Error, Result};

pub const ORACLE_MAX_DIM: usize = 8;
const ROOT_WIDTH: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    /// Coefficients of `det(λI − M)` from `λ^n` down to the constant term.
    pub coefficients: Vec<i64>,
    pub smallest_root: f64,
}

fn integer_entries(m: &SymMatrix) -> Result<Vec<i128>> {
    let n = m.dim();
    if n == 0 {
        return invalid("empty matrix");
    }
    if n > ORACLE_MAX_DIM {
        return Err(Error::CapacityExceeded {
            what: "oracle dimension",
            limit: ORACLE_MAX_DIM as u64,
            requested: n as u64,
        });
    }
    m.data()
        .iter()
        .map(|&x| {
            if x.fract() == 0.0 && x.abs() < 2f64.powi(31) {
                Ok(x as i128)
            } else {
                invalid(format!("oracle needs integer entries, found {x}"))
            }
        })
        .collect()
}

fn faddeev_leverrier(a: &[i128], n: usize) -> Vec<i128> {
    let mut coef = vec![0i128; n + 1];
    coef[0] = 1;
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        // M ← A·M + c·I
        let mut next = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| a[i * n + l] * m[l * n + j]).sum();
            }
            next[i * n + i] += coef[k - 1];
        }
        m = next;
        let trace: i128 = (0..n)
            .map(|i| (0..n).map(|l| a[i * n + l] * m[l * n + i]).sum::<i128>())
            .sum();
        debug_assert_eq!(trace % k as i128, 0);
        coef[k] = -trace / k as i128;
    }
    coef
}

pub fn charpoly_oracle(m: &SymMatrix) -> Result<CharPoly> {
    let a = integer_entries(m)?;
    let coef = faddeev_leverrier(&a, m.dim());
    let poly = Poly::from_high_to_low(&coef);
    let squarefree = poly.div(&poly.gcd(&poly.derivative()));
    let smallest_root = real_roots(&squarefree)[0];
    Ok(CharPoly {
        coefficients: coef.iter().map(|&c| c as i64).collect(),
        smallest_root,
    })
}

/// Every eigenvalue of an integer symmetric matrix with multiplicity,
/// ascending, from the exact square-free factorisation.
pub fn oracle_spectrum(m: &SymMatrix) -> Result<Vec<f64>> {
    let a = integer_entries(m)?;
    let coef = faddeev_leverrier(&a, m.dim());
    let mut out = Vec::with_capacity(m.dim());
    for (mult, factor) in Poly::from_high_to_low(&coef).yun().into_iter().enumerate() {
        if factor.degree() > 0 {
            for r in real_roots(&factor) {
                out.extend(std::iter::repeat_n(r, mult + 1));
            }
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Dense univariate polynomial over ℚ, coefficients lowest degree first,
/// no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn from_high_to_low(c: &[i128]) -> Poly {
        let mut p = Poly(c.iter().rev().map(|&x| BigRational::from_integer(BigInt::from(x))).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn derivative(&self) -> Poly {
        let mut p = Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        );
        p.trim();
        p
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        let mut p = Poly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        );
        p.trim();
        p
    }

    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.0.clone();
        let dd = d.degree();
        let lead = d.0.last().unwrap().clone();
        if self.0.len() < d.0.len() {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.0.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &c * dj;
                }
            }
            quot[i] = c;
        }
        let mut q = Poly(quot);
        let mut r = Poly(rem);
        q.trim();
        r.trim();
        (q, r)
    }

    fn div(&self, d: &Poly) -> Poly {
        self.div_rem(d).0
    }

    fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free factors `a_1, a_2, …` with `p = c · Π a_i^i`.
    fn yun(&self) -> Vec<Poly> {
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div(&a0);
        let mut c = d.div(&a0);
        let mut dd = c.sub(&b.derivative());
        let mut out = Vec::new();
        while !b.is_constant() {
            let a = b.gcd(&dd);
            b = b.div(&a);
            c = dd.div(&a);
            dd = c.sub(&b.derivative());
            out.push(a);
        }
        out
    }

    /// Positive multiple with integer coefficients; same sign everywhere.
    fn to_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        self.0.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
    }
}

/// The dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn mid(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.exp.max(b.exp);
        let sum = (&a.num << (e - a.exp)) + (&b.num << (e - b.exp));
        Dyadic { num: sum, exp: e + 1 }
    }

    fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exp as i32)
    }
}

/// Sign of `p(x)`, with `p` given by integer coefficients lowest first.
fn sign_at(p: &[BigInt], x: &Dyadic) -> i8 {
    let Some(top) = p.last() else { return 0 };
    let d = p.len() - 1;
    let mut acc = top.clone();
    for k in (0..d).rev() {
        acc = acc * &x.num + (&p[k] << (x.exp as usize * (d - k)));
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_chain(p: &Poly) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(Poly(r.0.iter().map(|c| -c).collect()));
    }
    chain.iter().map(Poly::to_integer).collect()
}

fn variations(chain: &[Vec<BigInt>], x: &Dyadic) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct real roots of a square-free polynomial, ascending.
fn real_roots(p: &Poly) -> Vec<f64> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let lead = p.0.last().unwrap();
    let cauchy = p.0.iter().map(|c| (c / lead).abs()).fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();
    let mut e = 0u32;
    while BigRational::from_integer(BigInt::one() << e) <= cauchy {
        e += 1;
    }
    let hi = Dyadic { num: BigInt::one() << e, exp: 0 };
    let lo = Dyadic { num: -(BigInt::one() << e), exp: 0 };

    let chain = sturm_chain(p);
    let ints = &chain[0];
    let mut roots = Vec::new();
    isolate(&chain, ints, lo, hi, &mut roots);
    roots
}

/// Roots in the half-open interval `(lo, hi]`.
fn isolate(chain: &[Vec<BigInt>], p: &[BigInt], lo: Dyadic, hi: Dyadic, out: &mut Vec<f64>) {
    let count = variations(chain, &lo) - variations(chain, &hi);
    match count {
        0 => {}
        1 => out.push(bisect(p, lo, hi)),
        _ => {
            let mid = Dyadic::mid(&lo, &hi);
            isolate(chain, p, lo, mid.clone(), out);
            isolate(chain, p, mid, hi, out);
        }
    }
}

/// Sign-change bisection on an interval holding exactly one simple root.
fn bisect(p: &[BigInt], mut lo: Dyadic, mut hi: Dyadic) -> f64 {
    let hi_sign = sign_at(p, &hi);
    if hi_sign == 0 {
        return hi.to_f64();
    }
    while hi.to_f64() - lo.to_f64() > ROOT_WIDTH {
        let mid = Dyadic::mid(&lo, &hi);
        match sign_at(p, &mid) {
            0 => return mid.to_f64(),
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    Dyadic::mid(&lo, &hi).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use crate::spectra::q_matrix;

    #[test]
    fn triangle_polynomial() {
        let cp = charpoly_oracle(&q_matrix(&cycle_graph(3).unwrap())).unwrap();
        assert_eq!(cp.coefficients, vec![1, -6, 9, -4]);
        assert!((cp.smallest_root - 1.0).abs() < 1e-12);
    }

    #[test]
    fn edge_polynomial() {
        let cp = charpoly_oracle(&q_matrix(&path_graph(2).unwrap())).unwrap();
        assert_eq!(cp.coefficients, vec![1, -2, 0]);
        assert_eq!(cp.smallest_root, 0.0);
    }

    #[test]
    fn k4_polynomial() {
        // (λ − 2)^3 (λ − 6) = λ^4 − 12λ^3 + 48λ^2 − 80λ + 48
        let cp = charpoly_oracle(&q_matrix(&complete_graph(4).unwrap())).unwrap();
        assert_eq!(cp.coefficients, vec![1, -12, 48, -80, 48]);
        assert!((cp.smallest_root - 2.0).abs() < 1e-12);
        let all = oracle_spectrum(&q_matrix(&complete_graph(4).unwrap())).unwrap();
        assert_eq!(all.len(), 4);
        for (g, w) in all.iter().zip([2.0, 2.0, 2.0, 6.0]) {
            assert!((g - w).abs() < 1e-12);
        }
    }

    #[test]
    fn irrational_roots() {
        let cp = charpoly_oracle(&q_matrix(&cycle_graph(5).unwrap())).unwrap();
        assert!((cp.smallest_root - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_fractional_and_large() {
        let m = SymMatrix::from_rows(&[vec![0.5, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(charpoly_oracle(&m), Err(Error::InvalidParameter(_))));
        let big = q_matrix(&cycle_graph(9).unwrap());
        assert!(matches!(charpoly_oracle(&big), Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn yun_factorisation() {
        // (λ − 1)^2 (λ − 4): a_1 = λ − 4, a_2 = λ − 1
        let p = Poly::from_high_to_low(&[1, -6, 9, -4]);
        let f = p.yun();
        assert_eq!(f.len(), 2);
        assert_eq!(real_roots(&f[0]), vec![4.0]);
        assert_eq!(real_roots(&f[1]), vec![1.0]);
    }
}
