//! Exact scores of the form `(1/n) * ln(P)`.
//!
//! Every value the optimizer produces is the mean logarithm of a product of
//! small integers (cell sizes) or rationals (cell masses), so it is stored as
//! the pair `(P, n)` and compared by cross-powering: `P_a^{n_b}` against
//! `P_b^{n_a}`. Floating point is used only to short-circuit comparisons whose
//! outcome is unambiguous, and for display.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Relative gap below which float comparison defers to exact arithmetic.
const FLOAT_MARGIN: f64 = 1e-9;

/// Natural logarithm of an arbitrarily large unsigned integer.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map(f64::ln).unwrap_or(f64::INFINITY);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Compares `(1/na) ln(pa/qa)` with `(1/nb) ln(pb/qb)` for positive integers.
pub(crate) fn cmp_log_means(
    pa: &BigUint,
    qa: &BigUint,
    na: u64,
    pb: &BigUint,
    qb: &BigUint,
    nb: u64,
) -> Ordering {
    let fa = (ln_biguint(pa) - ln_biguint(qa)) / na as f64;
    let fb = (ln_biguint(pb) - ln_biguint(qb)) / nb as f64;
    if fa.is_finite() && fb.is_finite() {
        let margin = FLOAT_MARGIN * (1.0 + fa.abs() + fb.abs());
        if fa - fb > margin {
            return Ordering::Greater;
        }
        if fb - fa > margin {
            return Ordering::Less;
        }
    }
    let ea = u32::try_from(na).expect("score length exceeds u32");
    let eb = u32::try_from(nb).expect("score length exceeds u32");
    // pa/qa ^ nb  vs  pb/qb ^ na
    let lhs = num_traits::pow(pa.clone(), eb as usize) * num_traits::pow(qb.clone(), ea as usize);
    let rhs = num_traits::pow(pb.clone(), ea as usize) * num_traits::pow(qa.clone(), eb as usize);
    lhs.cmp(&rhs)
}

/// Largest `e` dividing `n` such that every value in `xs` is a perfect `e`-th power.
fn common_root_degree(xs: &[&BigUint], n: u64) -> u64 {
    let mut divisors: Vec<u64> = (1..=n).filter(|e| n.is_multiple_of(*e)).collect();
    divisors.reverse();
    for e in divisors {
        if e == 1 {
            return 1;
        }
        let Ok(e32) = u32::try_from(e) else { continue };
        if xs.iter().all(|x| is_perfect_power(x, e32)) {
            return e;
        }
    }
    1
}

fn is_perfect_power(x: &BigUint, e: u32) -> bool {
    if x.is_one() || x.is_zero() {
        return true;
    }
    // x >= 2 cannot be an e-th power when e exceeds its bit length
    if u64::from(e) > x.bits() {
        return false;
    }
    let r = x.nth_root(e);
    num_traits::pow(r, e as usize) == *x
}

/// `(1/n) ln(p)` with `p >= 1`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScore {
    p: BigUint,
    n: u64,
}

impl ExactScore {
    /// Builds a score without canonicalizing. Panics on `p = 0` or `n = 0`.
    pub fn new(p: impl Into<BigUint>, n: u64) -> Self {
        let p = p.into();
        assert!(!p.is_zero(), "score numerator must be >= 1");
        assert!(n >= 1, "score length must be >= 1");
        ExactScore { p, n }
    }

    pub fn zero() -> Self {
        ExactScore { p: BigUint::one(), n: 1 }
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_one()
    }

    /// Value in nats.
    pub fn nats(&self) -> f64 {
        ln_biguint(&self.p) / self.n as f64
    }

    /// Value in the given logarithm base.
    pub fn in_base(&self, base: f64) -> f64 {
        self.nats() / base.ln()
    }

    /// Reduces `n` to its minimum by extracting the largest root of `p`.
    pub fn canonicalize(&self) -> ExactScore {
        if self.p.is_one() {
            return ExactScore::zero();
        }
        let e = common_root_degree(&[&self.p], self.n);
        if e == 1 {
            return self.clone();
        }
        ExactScore { p: self.p.nth_root(e as u32), n: self.n / e }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    /// Exact comparison of values; does not require canonical form.
    pub fn compare(&self, other: &ExactScore) -> Ordering {
        let one = BigUint::one();
        cmp_log_means(&self.p, &one, self.n, &other.p, &one, other.n)
    }

    /// Score of the concatenation of two words whose scores are given in raw
    /// form, `p` the product of cell sizes and `n` the length.
    pub fn concat(&self, other: &ExactScore) -> ExactScore {
        ExactScore { p: &self.p * &other.p, n: self.n + other.n }
    }
}

impl fmt::Display for ExactScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/{})·ln {}", self.n, self.p)
    }
}

/// Serialized as `{"p": "<decimal>", "n": <int>}`.
impl Serialize for ExactScore {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactScore", 2)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("n", &self.n)?;
        st.end()
    }
}

/// `(1/n) ln(p)` for a positive rational `p`; the pressure analogue of [`ExactScore`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalScore {
    p: BigRational,
    n: u64,
}

impl RationalScore {
    pub fn new(p: BigRational, n: u64) -> Self {
        assert!(p.is_positive(), "pressure argument must be positive");
        assert!(n >= 1);
        RationalScore { p, n }
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    fn parts(&self) -> (BigUint, BigUint) {
        let num = self.p.numer().to_biguint().expect("positive");
        let den = self.p.denom().to_biguint().expect("positive");
        (num, den)
    }

    pub fn nats(&self) -> f64 {
        let (num, den) = self.parts();
        (ln_biguint(&num) - ln_biguint(&den)) / self.n as f64
    }

    pub fn canonicalize(&self) -> RationalScore {
        if self.p.is_one() {
            return RationalScore { p: BigRational::one(), n: 1 };
        }
        let (num, den) = self.parts();
        let e = common_root_degree(&[&num, &den], self.n);
        if e == 1 {
            return self.clone();
        }
        let e32 = e as u32;
        let p = BigRational::new(num.nth_root(e32).into(), den.nth_root(e32).into());
        RationalScore { p, n: self.n / e }
    }

    pub fn compare(&self, other: &RationalScore) -> Ordering {
        let (pa, qa) = self.parts();
        let (pb, qb) = other.parts();
        cmp_log_means(&pa, &qa, self.n, &pb, &qb, other.n)
    }

    /// Exact comparison against an integer score.
    pub fn compare_exact(&self, other: &ExactScore) -> Ordering {
        let (pa, qa) = self.parts();
        cmp_log_means(&pa, &qa, self.n, other.p(), &BigUint::one(), other.n())
    }

    /// The argument rendered as `num` or `num/den`.
    pub fn p_string(&self) -> String {
        let (num, den) = self.parts();
        if den.is_one() {
            num.to_string()
        } else {
            format!("{num}/{den}")
        }
    }
}

impl From<&ExactScore> for RationalScore {
    fn from(s: &ExactScore) -> Self {
        RationalScore::new(BigRational::from_integer(s.p.clone().into()), s.n)
    }
}

impl fmt::Display for RationalScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/{})·ln {}", self.n, self.p_string())
    }
}

/// Least common multiple of the denominators; used to clear fractions in weights.
pub(crate) fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigUint {
    let mut l = BigUint::one();
    for x in xs {
        let d = x.denom().to_biguint().expect("positive denominator");
        l = l.lcm(&d);
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: u64, n: u64) -> ExactScore {
        ExactScore::new(p, n)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(s(2, 2).compare(&s(2, 2)), Ordering::Equal);
        assert_eq!(s(650, 2).compare(&s(2, 2)), Ordering::Greater);
        assert_eq!(s(9, 2).compare(&s(8, 2)), Ordering::Greater);
        // equal values in different forms
        assert_eq!(s(4, 4).compare(&s(2, 2)), Ordering::Equal);
    }

    #[test]
    fn compare_near_tie_goes_exact() {
        // 2^53 + 1 vs 2^53: floats cannot tell them apart
        let a = ExactScore::new(BigUint::from(2u64).pow(53) + 1u32, 3);
        let b = ExactScore::new(BigUint::from(2u64).pow(53), 3);
        assert_eq!(a.compare(&b), Ordering::Greater);
        assert_eq!(b.compare(&a), Ordering::Less);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(s(4, 4).canonicalize(), s(2, 2));
        assert_eq!(s(4, 2).canonicalize(), s(2, 1));
        assert_eq!(s(650, 2).canonicalize(), s(650, 2));
        assert_eq!(s(1, 7).canonicalize(), s(1, 1));
        assert_eq!(s(64, 6).canonicalize(), s(2, 1));
        assert_eq!(s(8, 2).canonicalize(), s(8, 2));
    }

    #[test]
    fn rational_canonicalize() {
        let r = RationalScore::new(BigRational::new(9.into(), 4.into()), 2).canonicalize();
        assert_eq!(r.p_string(), "3/2");
        assert_eq!(r.n(), 1);
    }

    #[test]
    fn large_ln_is_accurate() {
        let x = BigUint::from(3u32).pow(5000);
        assert!((ln_biguint(&x) - 5000.0 * 3f64.ln()).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn compare_agrees_with_floats(pa in 1u64..1_000_000, na in 1u64..12, pb in 1u64..1_000_000, nb in 1u64..12) {
            let a = s(pa, na);
            let b = s(pb, nb);
            let fa = (pa as f64).ln() / na as f64;
            let fb = (pb as f64).ln() / nb as f64;
            match a.compare(&b) {
                Ordering::Greater => prop_assert!(fa > fb - 1e-9),
                Ordering::Less => prop_assert!(fa < fb + 1e-9),
                Ordering::Equal => prop_assert!((fa - fb).abs() < 1e-9),
            }
            prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        }

        #[test]
        fn canonicalize_is_idempotent_and_value_preserving(p in 1u64..100_000, n in 1u64..13) {
            let a = s(p, n);
            let c = a.canonicalize();
            prop_assert_eq!(c.compare(&a), Ordering::Equal);
            prop_assert_eq!(c.canonicalize(), c.clone());
            prop_assert!(c.n() <= n);
        }

        #[test]
        fn compare_is_transitive(x in 1u64..5000, y in 1u64..5000, z in 1u64..5000, nx in 1u64..6, ny in 1u64..6, nz in 1u64..6) {
            let mut v = [s(x, nx), s(y, ny), s(z, nz)];
            v.sort_by(|a, b| a.compare(b));
            prop_assert_ne!(v[0].compare(&v[2]), Ordering::Greater);
        }
    }
}
