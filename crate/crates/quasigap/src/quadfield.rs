//! Exact arithmetic in real quadratic fields `K = Q(sqrt(d))`.
//!
//! Elements are stored as exact rational coordinates over the ring-of-integers
//! basis `(1, tau)`, where `tau = (1+sqrt(d))/2` if `d = 1 mod 4` and
//! `tau = sqrt(d)` otherwise. Sign and order queries are answered by integer
//! arithmetic, never by floating comparison.

use crate::rational::Rat;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Which generator the ring of integers uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauKind {
    /// `tau = (1 + sqrt(d)) / 2`, for `d = 1 mod 4`.
    Half,
    /// `tau = sqrt(d)`, for `d = 2, 3 mod 4`.
    Root,
}

/// Element `a + b*tau` of `K` with exact rational coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub a: Rat,
    pub b: Rat,
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement {
        a: Rat::ZERO,
        b: Rat::ZERO,
    };
    pub const ONE: FieldElement = FieldElement {
        a: Rat::ONE,
        b: Rat::ZERO,
    };

    pub fn new(a: Rat, b: Rat) -> FieldElement {
        FieldElement { a, b }
    }

    pub fn from_integers(a: i128, b: i128) -> FieldElement {
        FieldElement {
            a: Rat::from_int(a),
            b: Rat::from_int(b),
        }
    }

    pub fn rational(r: Rat) -> FieldElement {
        FieldElement { a: r, b: Rat::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        FieldElement::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-self.a, -self.b)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}t)", self.a, self.b)
    }
}

/// The field `Q(sqrt(d))` with precomputed discriminant and fundamental unit.
#[derive(Clone, Debug)]
pub struct RealQuadraticField {
    d: i64,
    discriminant: i64,
    tau_kind: TauKind,
    tau_value: f64,
    tau_conj: f64,
    fundamental_unit: FieldElement,
    unit_norm: i32,
}

fn is_squarefree(d: i64) -> bool {
    if d % 4 == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn isqrt(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut x = (n as f64).sqrt() as i128;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Smallest unit `> 1` of the order `Z[tau]`, found by Pell enumeration on the
/// tau-coefficient.
fn fundamental_unit(d: i64, kind: TauKind) -> (FieldElement, i32) {
    let d = d as i128;
    let mut b: i128 = 1;
    loop {
        match kind {
            TauKind::Root => {
                // N(a + b sqrt(d)) = a^2 - d b^2 = +-1.
                let t = b
                    .checked_mul(b)
                    .and_then(|x| x.checked_mul(d))
                    .expect("fundamental unit search overflow");
                for (shift, norm) in [(-1i128, -1i32), (1, 1)] {
                    let a2 = t + shift;
                    let a = isqrt(a2);
                    if a >= 0 && a * a == a2 {
                        return (FieldElement::from_integers(a, b), norm);
                    }
                }
            }
            TauKind::Half => {
                // N(a + b tau) = a^2 + a b + b^2 (1-d)/4 = +-1, i.e.
                // (2a + b)^2 - d b^2 = +-4.
                let t = b
                    .checked_mul(b)
                    .and_then(|x| x.checked_mul(d))
                    .expect("fundamental unit search overflow");
                let mut best: Option<(FieldElement, i32)> = None;
                for (shift, norm) in [(-4i128, -1i32), (4, 1)] {
                    let u2 = t + shift;
                    let u = isqrt(u2);
                    if u >= 0 && u * u == u2 && (u - b).rem_euclid(2) == 0 {
                        // a = (u - b)/2 gives the candidate > 1; the other
                        // root pairs with it as +-1/lambda.
                        let a = (u - b) / 2;
                        let cand = FieldElement::from_integers(a, b);
                        let better = match &best {
                            None => true,
                            Some((e, _)) => a < e.a.num(),
                        };
                        if better {
                            best = Some((cand, norm));
                        }
                    }
                }
                if let Some(r) = best {
                    return r;
                }
            }
        }
        b += 1;
    }
}

impl RealQuadraticField {
    /// Builds `Q(sqrt(d))` for squarefree `d >= 2`.
    pub fn new(d: i64) -> Result<RealQuadraticField> {
        if d < 2 {
            return Err(Error::Validation(format!("d must be >= 2, got {d}")));
        }
        if !is_squarefree(d) {
            return Err(Error::Validation(format!("d must be squarefree, got {d}")));
        }
        let (kind, discriminant) = if d % 4 == 1 {
            (TauKind::Half, d)
        } else {
            (TauKind::Root, 4 * d)
        };
        let sq = (d as f64).sqrt();
        let (tau_value, tau_conj) = match kind {
            TauKind::Half => ((1.0 + sq) / 2.0, (1.0 - sq) / 2.0),
            TauKind::Root => (sq, -sq),
        };
        let (fundamental_unit, unit_norm) = fundamental_unit(d, kind);
        let field = RealQuadraticField {
            d,
            discriminant,
            tau_kind: kind,
            tau_value,
            tau_conj,
            fundamental_unit,
            unit_norm,
        };
        debug_assert_eq!(
            field.norm(&fundamental_unit),
            Rat::from_int(unit_norm as i128)
        );
        Ok(field)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn tau_kind(&self) -> TauKind {
        self.tau_kind
    }

    /// `tau` as an element of the field.
    pub fn tau(&self) -> FieldElement {
        FieldElement::from_integers(0, 1)
    }

    /// The fundamental unit `lambda > 1` (generates the units modulo sign).
    pub fn fundamental_unit(&self) -> FieldElement {
        self.fundamental_unit
    }

    /// `N(lambda)`, either `+1` or `-1`; equals the sign of `sigma(lambda)`.
    pub fn unit_norm(&self) -> i32 {
        self.unit_norm
    }

    /// `sqrt(d)` as an element.
    pub fn sqrt_d(&self) -> FieldElement {
        match self.tau_kind {
            TauKind::Root => self.tau(),
            // sqrt(d) = 2 tau - 1.
            TauKind::Half => FieldElement::from_integers(-1, 2),
        }
    }

    /// Trace and norm of `tau`, so that `tau^2 = -n + t*tau`.
    fn tau_trace_norm(&self) -> (i128, i128) {
        match self.tau_kind {
            TauKind::Half => (1, (1 - self.d as i128) / 4),
            TauKind::Root => (0, -(self.d as i128)),
        }
    }

    /// Galois conjugate `sigma(a + b tau) = a + b sigma(tau)`.
    pub fn conj(&self, x: &FieldElement) -> FieldElement {
        match self.tau_kind {
            // sigma(tau) = 1 - tau.
            TauKind::Half => FieldElement::new(x.a + x.b, -x.b),
            // sigma(tau) = -tau.
            TauKind::Root => FieldElement::new(x.a, -x.b),
        }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let (t, n) = self.tau_trace_norm();
        let bb = x.b * y.b;
        // (a1 + b1 t)(a2 + b2 t) with t^2 = t*Tr - N.
        let a = x.a * y.a - bb * Rat::from_int(n);
        let b = x.a * y.b + x.b * y.a + bb * Rat::from_int(t);
        FieldElement::new(a, b)
    }

    pub fn inv(&self, x: &FieldElement) -> FieldElement {
        let n = self.norm(x);
        assert!(!n.is_zero(), "inverse of zero field element");
        let c = self.conj(x);
        FieldElement::new(c.a / n, c.b / n)
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let inv = self.inv(y);
        self.mul(x, &inv)
    }

    /// `N(x) = x * sigma(x)`, exact.
    pub fn norm(&self, x: &FieldElement) -> Rat {
        let (t, n) = self.tau_trace_norm();
        x.a * x.a + x.a * x.b * Rat::from_int(t) + x.b * x.b * Rat::from_int(n)
    }

    /// Both embeddings `(x, sigma(x))` as floating values.
    pub fn embed(&self, x: &FieldElement) -> (f64, f64) {
        (
            x.a.to_f64() + x.b.to_f64() * self.tau_value,
            x.a.to_f64() + x.b.to_f64() * self.tau_conj,
        )
    }

    /// Identity embedding of `x` as a float.
    pub fn value(&self, x: &FieldElement) -> f64 {
        self.embed(x).0
    }

    /// Writes `x = (p + q sqrt(d)) / r` with integers `p, q, r > 0`.
    fn to_sqrt_form(&self, x: &FieldElement) -> (i128, i128, i128) {
        // a + b tau; Half: = (2a+b)/2 + (b/2) sqrt(d); Root: = a + b sqrt(d).
        let (p, q) = match self.tau_kind {
            TauKind::Half => (x.a + x.a + x.b, x.b),
            TauKind::Root => (x.a, x.b),
        };
        let r = p
            .den()
            .checked_mul(q.den() / gcd_i128(p.den(), q.den()))
            .expect("exact sign overflow");
        (
            p.num() * (r / p.den()),
            q.num() * (r / q.den()),
            if self.tau_kind == TauKind::Half { 2 * r } else { r },
        )
    }

    /// Exact sign of the identity embedding of `x`.
    pub fn sign(&self, x: &FieldElement) -> Ordering {
        let (p, q, _) = self.to_sqrt_form(x);
        sign_p_plus_q_sqrt_d(p, q, self.d as i128)
    }

    /// Exact sign of the conjugate embedding of `x`.
    pub fn sign_conj(&self, x: &FieldElement) -> Ordering {
        self.sign(&self.conj(x))
    }

    /// Exact order of two elements in the identity embedding.
    pub fn cmp(&self, x: &FieldElement, y: &FieldElement) -> Ordering {
        self.sign(&(*x - *y))
    }

    pub fn is_positive(&self, x: &FieldElement) -> bool {
        self.sign(x) == Ordering::Greater
    }

    /// Kronecker character `chi_K(n) = (Delta_K / n)`.
    pub fn chi(&self, n: u64) -> i32 {
        kronecker(self.discriminant as i128, n as i128)
    }

    /// `zeta_K(2)` by the finite character sum against the second Bernoulli
    /// polynomial; only the final `pi^4 / sqrt(Delta)` factor is floating.
    pub fn zeta_k_2(&self) -> f64 {
        let delta = self.discriminant as i128;
        // sum_a chi(a) * B2(a/Delta), B2(x) = x^2 - x + 1/6, exactly.
        let mut s = Rat::ZERO;
        for a in 1..=delta {
            let chi = kronecker(delta, a);
            if chi == 0 {
                continue;
            }
            let b2 = Rat::new(6 * a * a - 6 * a * delta + delta * delta, 6 * delta * delta);
            let term = if chi > 0 { b2 } else { -b2 };
            s = s + term;
        }
        let pi4 = std::f64::consts::PI.powi(4);
        pi4 / (6.0 * (self.discriminant as f64).sqrt()) * s.to_f64()
    }

    /// Formats an element as a readable radical string like `2 + 3/2 sqrt(2)`.
    pub fn format_radical(&self, x: &FieldElement) -> String {
        let (p, q, r) = self.to_sqrt_form(x);
        let sq = format!("sqrt({})", self.d);
        let term = |n: i128, unit: &str| -> Option<String> {
            if n == 0 {
                return None;
            }
            let frac = if n % r == 0 {
                format!("{}", n / r)
            } else {
                format!("{}/{}", n, r)
            };
            Some(if unit.is_empty() {
                frac
            } else if frac == "1" {
                unit.to_string()
            } else if frac == "-1" {
                format!("-{unit}")
            } else {
                format!("{frac} {unit}")
            })
        };
        match (term(p, ""), term(q, &sq)) {
            (None, None) => "0".to_string(),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => {
                if q > 0 {
                    format!("{a} + {b}")
                } else {
                    format!("{a} - {}", term(-q, &sq).unwrap())
                }
            }
        }
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// Exact sign of `p + q sqrt(d)` for integers, `d > 0` not a square.
fn sign_p_plus_q_sqrt_d(p: i128, q: i128, d: i128) -> Ordering {
    if q == 0 {
        return p.cmp(&0);
    }
    if p == 0 {
        return q.cmp(&0);
    }
    if p > 0 && q > 0 {
        return Ordering::Greater;
    }
    if p < 0 && q < 0 {
        return Ordering::Less;
    }
    // Opposite signs: compare p^2 against q^2 d without overflow.
    let p2 = (p.unsigned_abs())
        .checked_mul(p.unsigned_abs())
        .expect("exact sign overflow");
    let q2 = (q.unsigned_abs())
        .checked_mul(q.unsigned_abs())
        .expect("exact sign overflow");
    match cmp_u128_mul(p2, 1, q2, d.unsigned_abs()) {
        Ordering::Greater => p.cmp(&0),
        Ordering::Less => q.cmp(&0),
        Ordering::Equal => unreachable!("sqrt(d) rational"),
    }
}

/// Compares `a*b` with `c*e` in 256-bit precision.
fn cmp_u128_mul(a: u128, b: u128, c: u128, e: u128) -> Ordering {
    let (lo1, hi1) = widening_mul(a, b);
    let (lo2, hi2) = widening_mul(c, e);
    hi1.cmp(&hi2).then(lo1.cmp(&lo2))
}

fn widening_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = (1 << 64) - 1;
    let (a0, a1) = (a & MASK, a >> 64);
    let (b0, b1) = (b & MASK, b >> 64);
    let ll = a0 * b0;
    let lh = a0 * b1;
    let hl = a1 * b0;
    let hh = a1 * b1;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let lo = (ll & MASK) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (lo, hi)
}

/// Kronecker symbol `(a / n)` for `n >= 0`.
fn kronecker(a: i128, n: i128) -> i32 {
    let mut a = a;
    let mut n = n;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // Factor out twos from n.
    while n % 2 == 0 {
        n /= 2;
        match (a % 8 + 8) % 8 {
            0 | 2 | 4 | 6 => return 0,
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => unreachable!(),
        }
    }
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            match n % 8 {
                1 | 7 => {}
                3 | 5 => result = -result,
                _ => unreachable!(),
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Fractional ideal of `O_K` given by an explicit Z-basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    basis: (FieldElement, FieldElement),
    absolute_norm: Rat,
}

impl Ideal {
    /// The ring of integers itself, basis `(1, tau)`.
    pub fn ring_of_integers(field: &RealQuadraticField) -> Ideal {
        Ideal::new(field, FieldElement::ONE, field.tau()).expect("O_K is an ideal")
    }

    /// Builds the ideal with Z-basis `(w1, w2)`, validating that the span is
    /// a rank-two O_K-module.
    pub fn new(
        field: &RealQuadraticField,
        w1: FieldElement,
        w2: FieldElement,
    ) -> Result<Ideal> {
        // Linear independence over Q: det of coordinates nonzero.
        let det = w1.a * w2.b - w2.a * w1.b;
        if det.is_zero() {
            return Err(Error::Validation(
                "ideal basis is linearly dependent".into(),
            ));
        }
        // tau-stability: tau*w must lie in Z w1 + Z w2 for both basis vectors.
        for w in [&w1, &w2] {
            let tw = field.mul(&field.tau(), w);
            // Solve tw = m w1 + n w2 over Q.
            let m = (tw.a * w2.b - tw.b * w2.a) / det;
            let n = (tw.b * w1.a - tw.a * w1.b) / det;
            if !m.is_integer() || !n.is_integer() {
                return Err(Error::Validation(
                    "basis does not span an O_K-module (not an ideal)".into(),
                ));
            }
        }
        // Absolute norm = covol(iota(I)) / sqrt(Delta); with
        // e = w1 sigma(w2) - w2 sigma(w1) = q*sqrt(Delta)/2 + 0 it equals |q|/2.
        let e = field.mul(&w1, &field.conj(&w2)) - field.mul(&w2, &field.conj(&w1));
        debug_assert!(e.a.is_zero() || field.tau_kind() == TauKind::Half);
        // e is antisymmetric under conjugation, hence a rational multiple of
        // sqrt(Delta); in both tau conventions Nr(I) = |tau-coefficient| / 2.
        let absolute_norm = e.b.abs() * Rat::new(1, 2);
        Ok(Ideal {
            basis: (w1, w2),
            absolute_norm,
        })
    }

    /// Scales every basis vector by a nonzero field element.
    pub fn scale(&self, field: &RealQuadraticField, c: &FieldElement) -> Ideal {
        assert!(!c.is_zero());
        Ideal::new(
            field,
            field.mul(c, &self.basis.0),
            field.mul(c, &self.basis.1),
        )
        .expect("scaled ideal stays an ideal")
    }

    pub fn basis(&self) -> (FieldElement, FieldElement) {
        self.basis
    }

    pub fn absolute_norm(&self) -> Rat {
        self.absolute_norm
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(d: i64) -> RealQuadraticField {
        RealQuadraticField::new(d).unwrap()
    }

    #[test]
    fn rejects_bad_d() {
        assert!(RealQuadraticField::new(1).is_err());
        assert!(RealQuadraticField::new(4).is_err());
        assert!(RealQuadraticField::new(12).is_err());
        assert!(RealQuadraticField::new(0).is_err());
    }

    #[test]
    fn discriminants_and_units() {
        let k2 = f(2);
        assert_eq!(k2.discriminant(), 8);
        assert_eq!(k2.fundamental_unit(), FieldElement::from_integers(1, 1));
        assert_eq!(k2.unit_norm(), -1);

        let k3 = f(3);
        assert_eq!(k3.discriminant(), 12);
        assert_eq!(k3.fundamental_unit(), FieldElement::from_integers(2, 1));
        assert_eq!(k3.unit_norm(), 1);

        let k5 = f(5);
        assert_eq!(k5.discriminant(), 5);
        assert_eq!(k5.fundamental_unit(), FieldElement::from_integers(0, 1));
        assert_eq!(k5.unit_norm(), -1);

        // Larger Pell solutions are still exact.
        let k46 = f(46);
        let lam = k46.fundamental_unit();
        assert_eq!((lam.a.num(), lam.b.num()), (24335, 3588));
        assert_eq!(k46.norm(&lam), Rat::ONE);
    }

    #[test]
    fn embeddings() {
        let k2 = f(2);
        let x = FieldElement::from_integers(1, 1);
        let (id, conj) = k2.embed(&x);
        assert!((id - (1.0 + 2f64.sqrt())).abs() < 1e-15);
        assert!((conj - (1.0 - 2f64.sqrt())).abs() < 1e-15);

        let one = FieldElement::ONE;
        assert_eq!(k2.embed(&one), (1.0, 1.0));

        let k5 = f(5);
        let (id, conj) = k5.embed(&k5.tau());
        assert!((id - 1.618033988749895).abs() < 1e-15);
        assert!((conj + 0.618033988749895).abs() < 1e-15);
    }

    #[test]
    fn norms() {
        let k2 = f(2);
        assert_eq!(k2.norm(&k2.tau()), Rat::from_int(-2));
        let k5 = f(5);
        assert_eq!(k5.norm(&k5.fundamental_unit()), Rat::from_int(-1));
        let k3 = f(3);
        assert_eq!(k3.norm(&k3.fundamental_unit()), Rat::from_int(1));
    }

    #[test]
    fn embed_is_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for d in [2, 3, 5, 7, 13] {
            let k = f(d);
            for _ in 0..100 {
                let x = FieldElement::from_integers(rng.gen_range(-50..50), rng.gen_range(-50..50));
                let y = FieldElement::from_integers(rng.gen_range(-50..50), rng.gen_range(-50..50));
                let (xi, xc) = k.embed(&x);
                let (yi, yc) = k.embed(&y);
                let (pi, pc) = k.embed(&k.mul(&x, &y));
                assert!((pi - xi * yi).abs() < 1e-9 * (1.0 + pi.abs()));
                assert!((pc - xc * yc).abs() < 1e-9 * (1.0 + pc.abs()));
            }
        }
    }

    #[test]
    fn exact_sign_matches_float() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let k = f(2);
        for _ in 0..10_000 {
            let a: i128 = rng.gen_range(-1_000_000..=1_000_000);
            let b: i128 = rng.gen_range(-1_000_000..=1_000_000);
            // Element a + b sqrt(2).
            let x = FieldElement::from_integers(a, b);
            let v = a as f64 + b as f64 * 2f64.sqrt();
            if v.abs() > 1e-3 {
                assert_eq!(k.sign(&x) == Ordering::Greater, v > 0.0, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn kronecker_character() {
        let k2 = f(2);
        assert_eq!(k2.chi(1), 1);
        assert_eq!(k2.chi(7), 1);
        assert_eq!(k2.chi(3), -1);
        assert_eq!(k2.chi(5), -1);
        assert_eq!(k2.chi(2), 0);
        assert_eq!(k2.chi(11), -1); // period 8
        for d in [2, 3, 5, 7, 13] {
            let k = f(d);
            let delta = k.discriminant() as u64;
            for n in 1..=3 * delta {
                if gcd_i128(n as i128, delta as i128) > 1 {
                    assert_eq!(k.chi(n), 0);
                } else {
                    assert_eq!(k.chi(n), k.chi(n + delta));
                    assert_ne!(k.chi(n), 0);
                }
            }
        }
    }

    #[test]
    fn zeta_closed_forms() {
        let pi4 = std::f64::consts::PI.powi(4);
        assert!((f(2).zeta_k_2() - pi4 / (48.0 * 2f64.sqrt())).abs() < 1e-12);
        assert!((f(3).zeta_k_2() - pi4 / (36.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!((f(5).zeta_k_2() - 2.0 * pi4 / (75.0 * 5f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn zeta_matches_dirichlet_series() {
        // zeta_K(2) = zeta(2) * L(2, chi_K), partial sums to 10^6 terms.
        for d in [2, 3, 5, 7, 13] {
            let k = f(d);
            let delta = k.discriminant() as u64;
            let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
            let mut l = 0.0f64;
            for n in (1..=1_000_000u64).rev() {
                let c = kronecker(delta as i128, n as i128);
                if c != 0 {
                    l += c as f64 / (n as f64 * n as f64);
                }
            }
            assert!(
                (k.zeta_k_2() - zeta2 * l).abs() < 1e-8,
                "d={d}: {} vs {}",
                k.zeta_k_2(),
                zeta2 * l
            );
        }
    }

    #[test]
    fn ideals() {
        let k = f(2);
        let ok = Ideal::ring_of_integers(&k);
        assert_eq!(ok.absolute_norm(), Rat::ONE);

        // 2 O_K has norm 4; sqrt(2) O_K has norm 2.
        let two = Ideal::new(
            &k,
            FieldElement::from_integers(2, 0),
            FieldElement::from_integers(0, 2),
        )
        .unwrap();
        assert_eq!(two.absolute_norm(), Rat::from_int(4));
        let rt2 = ok.scale(&k, &k.tau());
        assert_eq!(rt2.absolute_norm(), Rat::from_int(2));

        // Z-span of (1, 2 tau) is not tau-stable.
        assert!(Ideal::new(
            &k,
            FieldElement::ONE,
            FieldElement::from_integers(0, 2)
        )
        .is_err());
    }

    #[test]
    fn unit_conjugate_sign_matches_norm() {
        for d in [2, 3, 5, 6, 7, 11, 13, 14, 17, 19, 21, 46] {
            let k = f(d);
            let lam = k.fundamental_unit();
            let n = k.norm(&lam);
            assert!(n == Rat::ONE || n == Rat::from_int(-1));
            assert!(k.is_positive(&lam));
            assert!(k.value(&lam) > 1.0);
            let sc = k.sign_conj(&lam);
            assert_eq!(sc == Ordering::Greater, k.unit_norm() == 1);
        }
    }
}
