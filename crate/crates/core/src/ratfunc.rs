//! Exact polynomials and rational functions over the integers, and the
//! generating functions of automata.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::automaton::{Automaton, AutomatonKind};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients ascending by degree, with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Polynomial::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self` divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn div_scalar(&self, k: &BigInt) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    fn shift_scale_sub(&mut self, other: &Polynomial, shift: usize, k: &BigInt) {
        // self -= k * x^shift * other
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs
                .resize(other.coeffs.len() + shift, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] -= k * c;
        }
        *self = Polynomial::new(std::mem::take(&mut self.coeffs));
    }

    /// Quotient and remainder over the integers; fails unless every step's
    /// leading coefficient divides exactly.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let (q, r) = rem.leading().unwrap().div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem.shift_scale_sub(divisor, rd - dd, &q);
            quot[rd - dd] = q;
        }
        Ok((Polynomial::new(quot), rem))
    }

    /// Exact quotient; fails when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Remainder of `lc(divisor)^k * self` by `divisor` for a suitable `k`.
    pub fn pseudo_rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            rem = rem.scale(&lead);
            rem.shift_scale_sub(divisor, rd - dd, &top);
        }
        Ok(rem)
    }

    /// Greatest common divisor with positive leading coefficient, computed
    /// by the primitive remainder sequence.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Polynomial::constant(content);
            }
            let r = a.pseudo_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    fn normalized_sign(&self) -> Polynomial {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Polynomial {
    /// Ascending powers: `1 - 4*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Reduced quotient `numerator / denominator`.
///
/// Canonical form: numerator and denominator are coprime over the
/// rationals, their coefficients share no common integer factor, and the
/// denominator's constant term is positive (its lowest nonzero coefficient
/// when the constant term vanishes). For power series with integer
/// coefficients this makes the denominator's constant term exactly 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        let lowest = &den.coeffs[den.valuation().unwrap()];
        if lowest.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn add_polynomial(&self, p: &Polynomial) -> Self {
        RationalFunction::new(&self.num + &(p * &self.den), self.den.clone())
            .expect("denominator is nonzero")
    }

    pub fn is_canonical(&self) -> bool {
        RationalFunction::new(self.num.clone(), self.den.clone()).is_ok_and(|r| r == *self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Counting sequence indexed by length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Series(pub Vec<BigInt>);

impl Series {
    pub fn from_u64s(v: &[u64]) -> Self {
        Series(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First index where the two series differ, within their common length.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        self.0.iter().zip(&other.0).position(|(a, b)| a != b)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Taylor coefficients up to `x^n_max`, by the recurrence the denominator
/// imposes. Needs an invertible constant term in the denominator.
pub fn series_from_gf(f: &RationalFunction, n_max: usize) -> Result<Series> {
    let den = f.denominator();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NotPowerSeries);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = f.numerator().coeff(n);
        for k in 1..=n.min(den.degree().unwrap_or(0)) {
            acc -= &den.coeffs()[k] * &out[n - k];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        out.push(q);
    }
    Ok(Series(out))
}

/// Accepted words per length by iterating the transition relation on an
/// integer state vector. Index 0 counts the empty permutation for class
/// automata.
pub fn series_from_automaton(a: &Automaton, n_max: usize) -> Series {
    let n = a.state_count();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(match a.kind() {
        AutomatonKind::Class => BigInt::one(),
        AutomatonKind::Indecomposable => BigInt::zero(),
    });
    let mut layer = vec![BigInt::zero(); n];
    layer[a.initial()] = BigInt::one();
    for _ in 1..=n_max {
        let mut next = vec![BigInt::zero(); n];
        for (s, count) in layer.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &t in a.transitions_from(s).values() {
                next[t] += count;
            }
        }
        out.push(a.accepts().iter().map(|&s| &next[s]).sum());
        layer = next;
    }
    Series(out)
}

/// One equation `diag * F_u = constant + Σ coeffs[t] * F_t`.
#[derive(Clone, Debug)]
struct Row {
    diag: Polynomial,
    constant: Polynomial,
    coeffs: BTreeMap<usize, Polynomial>,
}

impl Row {
    fn normalize(&mut self) {
        let mut g = self.diag.gcd(&self.constant);
        for c in self.coeffs.values() {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        let div = |p: &Polynomial| p.div_exact(&g).expect("row gcd divides every entry");
        self.diag = div(&self.diag);
        self.constant = div(&self.constant);
        for c in self.coeffs.values_mut() {
            *c = div(c);
        }
    }
}

/// Generating function of the automaton's language by the transfer matrix
/// method: the system `F_s = [s accepting] + x Σ_a F_{δ(s,a)}` is solved by
/// fraction-free elimination over `Z[x]`, one state at a time, choosing the
/// pivot with the lowest-degree diagonal (ties broken by fill-in). Class
/// automata get `1 +` for the empty permutation.
pub fn gf_from_automaton(a: &Automaton) -> RationalFunction {
    let base = match a.kind() {
        AutomatonKind::Class => Polynomial::one(),
        AutomatonKind::Indecomposable => Polynomial::zero(),
    };
    let live = coreachable(a);
    if !live[a.initial()] {
        return RationalFunction::from_polynomial(base);
    }

    let n = a.state_count();
    let x = Polynomial::x();
    let mut rows: Vec<Option<Row>> = vec![None; n];
    let mut users: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for u in (0..n).filter(|&u| live[u]) {
        let mut loops = 0i64;
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        for &t in a.transitions_from(u).values() {
            if !live[t] {
                continue;
            }
            if t == u {
                loops += 1;
            } else {
                *counts.entry(t).or_default() += 1;
            }
        }
        for &t in counts.keys() {
            users[t].insert(u);
        }
        rows[u] = Some(Row {
            diag: Polynomial::from_i64s(&[1, -loops]),
            constant: if a.is_accepting(u) {
                Polynomial::one()
            } else {
                Polynomial::zero()
            },
            coeffs: counts
                .into_iter()
                .map(|(t, k)| (t, x.scale(&BigInt::from(k))))
                .collect(),
        });
    }

    let mut remaining: BTreeSet<usize> = (0..n).filter(|&u| live[u] && u != a.initial()).collect();
    while let Some(pivot) = remaining.iter().copied().min_by_key(|&s| {
        let row = rows[s].as_ref().unwrap();
        let fill = users[s].len() * row.coeffs.len();
        (row.diag.degree().unwrap_or(0), fill, s)
    }) {
        remaining.remove(&pivot);
        let prow = rows[pivot].take().unwrap();
        for &t in prow.coeffs.keys() {
            users[t].remove(&pivot);
        }
        for u in std::mem::take(&mut users[pivot]) {
            let mut row = rows[u].take().unwrap();
            let q = row.coeffs.remove(&pivot).unwrap();
            let mut diag = &row.diag * &prow.diag;
            if let Some(back) = prow.coeffs.get(&u) {
                diag = &diag - &(&q * back);
                users[u].remove(&pivot);
            }
            let constant = &(&prow.diag * &row.constant) + &(&q * &prow.constant);
            let mut coeffs: BTreeMap<usize, Polynomial> = row
                .coeffs
                .iter()
                .map(|(&t, c)| (t, &prow.diag * c))
                .collect();
            for (&t, c) in &prow.coeffs {
                if t == u {
                    continue;
                }
                let add = &q * c;
                let entry = coeffs.entry(t).or_default();
                *entry = &*entry + &add;
                users[t].insert(u);
            }
            coeffs.retain(|t, c| {
                let keep = !c.is_zero();
                if !keep {
                    users[*t].remove(&u);
                }
                keep
            });
            row.diag = diag;
            row.constant = constant;
            row.coeffs = coeffs;
            row.normalize();
            rows[u] = Some(row);
        }
    }

    let root = rows[a.initial()].take().unwrap();
    debug_assert!(root.coeffs.is_empty());
    RationalFunction::new(root.constant, root.diag)
        .expect("diagonal keeps constant term 1 up to scaling")
        .add_polynomial(&base)
}

/// States from which an accepting state is reachable.
fn coreachable(a: &Automaton) -> Vec<bool> {
    let n = a.state_count();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in 0..n {
        for &t in a.transitions_from(s).values() {
            preds[t].push(s);
        }
    }
    let mut live = vec![false; n];
    let mut queue: VecDeque<usize> = a.accepts().iter().copied().collect();
    for &s in a.accepts() {
        live[s] = true;
    }
    while let Some(t) = queue.pop_front() {
        for &s in &preds[t] {
            if !live[s] {
                live[s] = true;
                queue.push_back(s);
            }
        }
    }
    live
}

/// `det(I - xM)` for the letter-count matrix `M`, by fraction-free Bareiss
/// elimination on the dense matrix. Meant for small automata.
pub fn transfer_determinant(a: &Automaton) -> Polynomial {
    let n = a.state_count();
    let mut m: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    for (s, row) in m.iter_mut().enumerate() {
        for &t in a.transitions_from(s).values() {
            row[t] = &row[t] - &Polynomial::x();
        }
    }
    let mut sign = false;
    let mut prev = Polynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 {
        Polynomial::one()
    } else {
        m[n - 1][n - 1].clone()
    };
    if sign {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|v| poly(&v))
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&poly(&[1, -1]) * &poly(&[1, 1]), poly(&[1, 0, -1]));
        assert_eq!(poly(&[1, -3]).pow(2), poly(&[1, -6, 9]));
        let g = poly(&[1, 0, -1]).gcd(&poly(&[1, -1]));
        assert_eq!(g, poly(&[-1, 1]));
        assert_eq!(poly(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
        assert!(matches!(
            poly(&[1]).div_rem(&Polynomial::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            poly(&[1, 1]).div_exact(&poly(&[0, 2])),
            Err(Error::InexactDivision)
        ));
        let (q, r) = poly(&[-1, 0, 0, 1]).div_rem(&poly(&[-1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_with_content() {
        let a = &poly(&[2, -2]) * &poly(&[3, 1]);
        let b = &poly(&[4, -4]) * &poly(&[1, 0, 1]);
        assert_eq!(a.gcd(&b), poly(&[-2, 2]));
        assert_eq!(poly(&[6]).gcd(&poly(&[0, 4])), poly(&[2]));
        assert_eq!(Polynomial::zero().gcd(&poly(&[-3, -1])), poly(&[3, 1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[1, -4, 1]).to_string(), "1 - 4*x + x^2");
        assert_eq!(poly(&[0, -1, 0, 2]).to_string(), "-x + 2*x^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let f = RationalFunction::new(poly(&[1]), poly(&[1, -1])).unwrap();
        assert_eq!(f.to_string(), "(1) / (1 - x)");
    }

    #[test]
    fn canonical_form() {
        // (2 - 2x^2) / (-4 + 4x) = -(1 + x)/2
        let f = RationalFunction::new(poly(&[2, 0, -2]), poly(&[-4, 4])).unwrap();
        assert_eq!(f.numerator(), &poly(&[-1, -1]));
        assert_eq!(f.denominator(), &poly(&[2]));
        assert!(f.is_canonical());
        let g = RationalFunction::new(poly(&[0, 1]), poly(&[0, -3, 3])).unwrap();
        assert_eq!(g.denominator(), &poly(&[-3, 3]).scale(&BigInt::from(-1)));
        assert!(RationalFunction::new(poly(&[1]), Polynomial::zero()).is_err());
    }

    #[test]
    fn golden_expansion() {
        let num = &poly(&[1, -1]) * &poly(&[1, -3]).pow(2);
        let den = &poly(&[1, -2]).pow(2) * &poly(&[1, -4, 1]);
        assert_eq!(num, poly(&[1, -7, 15, -9]));
        assert_eq!(den, poly(&[1, -8, 21, -20, 4]));
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(
            series_from_gf(&f, 4).unwrap(),
            Series::from_u64s(&[1, 1, 2, 6, 22])
        );
    }

    #[test]
    fn series_examples() {
        let geo = RationalFunction::new(poly(&[1]), poly(&[1, -1])).unwrap();
        assert_eq!(
            series_from_gf(&geo, 3).unwrap(),
            Series::from_u64s(&[1, 1, 1, 1])
        );
        let one = RationalFunction::from_polynomial(Polynomial::one());
        assert_eq!(
            series_from_gf(&one, 3).unwrap(),
            Series::from_u64s(&[1, 0, 0, 0])
        );
        let bad = RationalFunction::new(poly(&[1]), poly(&[0, 1])).unwrap();
        assert!(matches!(
            series_from_gf(&bad, 3),
            Err(Error::NotPowerSeries)
        ));
    }

    /// Cramer's rule puts the generating function over `det(I - xM)`, so
    /// the reduced denominator divides it.
    #[test]
    fn denominator_divides_transfer_determinant() {
        use crate::automaton::{build_kind, BuildOptions};
        use crate::perm::Basis;
        for bs in ["21", "4321,3142", "132,4321", "231,4123", "2413,3142,4321"] {
            let b: Basis = bs.parse().unwrap();
            for kind in [AutomatonKind::Class, AutomatonKind::Indecomposable] {
                let a = build_kind(&b, kind, &BuildOptions::default())
                    .unwrap()
                    .minimize();
                let det = transfer_determinant(&a);
                assert_eq!(det.coeff(0), BigInt::one(), "{bs}");
                let gf = gf_from_automaton(&a);
                assert!(
                    det.div_exact(gf.denominator()).is_ok(),
                    "{bs} {kind:?}: {det} vs {}",
                    gf.denominator()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn gcd_divides_and_is_maximal(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let (ac, bc) = (&a * &c, &b * &c);
            let g = ac.gcd(&bc);
            prop_assert!(ac.pseudo_rem(&g).unwrap().is_zero());
            prop_assert!(bc.pseudo_rem(&g).unwrap().is_zero());
            // c divides both, so it divides the gcd up to a constant.
            prop_assert!(g.pseudo_rem(&c).unwrap().is_zero());
        }

        #[test]
        fn reduction_is_idempotent(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let f = RationalFunction::new(a, b).unwrap();
            prop_assert!(f.is_canonical());
        }

        #[test]
        fn series_roundtrip_through_product(a in arb_poly(), b in arb_poly()) {
            // (a*d)/d expands to the coefficients of a.
            let d = &poly(&[1]) - &(&Polynomial::x() * &b);
            let f = RationalFunction::new(&a * &d, d).unwrap();
            let s = series_from_gf(&f, 8).unwrap();
            for i in 0..=8 {
                prop_assert_eq!(&s.0[i], &a.coeff(i));
            }
        }
    }
}
