//! Prime powers, polynomial arithmetic over a prime field, and the
//! irreducibility / primitivity tests used to enumerate monic primitive
//! polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order accepted anywhere in the crate.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    TooLarge(u64),
    #[error("malformed polynomial: {0}")]
    Malformed(String),
    #[error("polynomial {0} is not primitive")]
    NotPrimitive(String),
}

/// A prime power `q = p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimePower {
    p: u64,
    k: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::Malformed("degree must be at least 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.checked_mul(p).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(FieldError::TooLarge(
                p.saturating_pow(k),
            ))?;
        }
        Ok(Self { p, k, q })
    }

    /// Decomposes `q` as a prime power.
    pub fn from_order(q: u64) -> Result<Self, FieldError> {
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        match factorize(q).as_slice() {
            [(p, k)] => Self::new(*p, *k),
            _ => Err(FieldError::NotPrimePower(q)),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.k)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Dense polynomials over F_p, coefficients low degree first, no trailing zeros.
mod poly {
    use super::inv_mod;

    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            if c != 0 {
                for (i, &mi) in m.iter().enumerate() {
                    let idx = top - dm + i;
                    r[idx] = (r[idx] + p - c * mi % p) % p;
                }
            }
            r.pop();
            r = trim(r);
        }
        trim(r)
    }

    pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
        let mut result = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
            e >>= 1;
        }
        result
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

fn check_coeffs(coeffs: &[u64], pp: PrimePower) -> Result<(), FieldError> {
    if coeffs.len() != pp.k as usize {
        return Err(FieldError::Malformed(format!(
            "expected {} coefficients over F_{}, got {}",
            pp.k,
            pp.p,
            coeffs.len()
        )));
    }
    if let Some(&c) = coeffs.iter().find(|&&c| c >= pp.p) {
        return Err(FieldError::Malformed(format!(
            "coefficient {c} out of range for F_{}",
            pp.p
        )));
    }
    Ok(())
}

fn monic(coeffs: &[u64]) -> poly::Poly {
    let mut m = coeffs.to_vec();
    m.push(1);
    m
}

/// Rabin's test on the monic polynomial `λ^k + a_{k-1}λ^{k-1} + … + a_0`.
pub fn poly_is_irreducible(coeffs: &[u64], pp: PrimePower) -> Result<bool, FieldError> {
    check_coeffs(coeffs, pp)?;
    Ok(irreducible_unchecked(&monic(coeffs), pp))
}

fn irreducible_unchecked(m: &[u64], pp: PrimePower) -> bool {
    let p = pp.p;
    let k = pp.k;
    let x: poly::Poly = vec![0, 1];
    // frob[i] = x^(p^i) mod m
    let mut frob = vec![poly::rem(&x, m, p)];
    for i in 1..=k as usize {
        let next = poly::pow_mod(&frob[i - 1], p, m, p);
        frob.push(next);
    }
    let x = poly::rem(&x, m, p);
    if !poly::sub(&frob[k as usize], &x, p).is_empty() {
        return false;
    }
    factorize(k as u64).iter().all(|&(r, _)| {
        let h = poly::sub(&frob[(k as u64 / r) as usize], &x, p);
        poly::gcd(m, &h, p).len() == 1
    })
}

/// True iff the monic polynomial is irreducible and λ has multiplicative
/// order exactly `q − 1` modulo it.
pub fn poly_is_primitive(coeffs: &[u64], pp: PrimePower) -> Result<bool, FieldError> {
    check_coeffs(coeffs, pp)?;
    let m = monic(coeffs);
    if !irreducible_unchecked(&m, pp) {
        return Ok(false);
    }
    Ok(root_order_is_full(&m, pp))
}

fn root_order_is_full(m: &[u64], pp: PrimePower) -> bool {
    let p = pp.p;
    let n = pp.q - 1;
    let x = [0, 1];
    let one = poly::rem(&[1], m, p);
    if poly::pow_mod(&x, n, m, p) != one {
        return false;
    }
    factorize(n)
        .iter()
        .all(|&(r, _)| poly::pow_mod(&x, n / r, m, p) != one)
}

/// A monic primitive polynomial of degree `k` over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitivePoly {
    pp: PrimePower,
    coeffs: Vec<u64>,
}

impl PrimitivePoly {
    pub fn new(pp: PrimePower, coeffs: Vec<u64>) -> Result<Self, FieldError> {
        if !poly_is_primitive(&coeffs, pp)? {
            return Err(FieldError::NotPrimitive(render(&coeffs, pp)));
        }
        Ok(Self { pp, coeffs })
    }

    /// The degree-one polynomial `λ − ξ` for a primitive element `ξ` of F_p.
    pub fn linear(p: u64, root: u64) -> Result<Self, FieldError> {
        let pp = PrimePower::new(p, 1)?;
        Self::new(pp, vec![(p - root % p) % p])
    }

    pub fn prime_power(&self) -> PrimePower {
        self.pp
    }

    /// `a_0, …, a_{k-1}`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `μ(1) mod p`, leading coefficient included.
    pub fn value_at_one(&self) -> u64 {
        (1 + self.coeffs.iter().sum::<u64>()) % self.pp.p
    }

    /// The monic reciprocal `λ^k μ(1/λ) / a_0`.
    pub fn reciprocal(&self) -> Self {
        let p = self.pp.p;
        let k = self.coeffs.len();
        let a0_inv = inv_mod(self.coeffs[0], p);
        let coeff = |i: usize| if i == k { 1 } else { self.coeffs[i] };
        let coeffs = (0..k).map(|i| coeff(k - i) * a0_inv % p).collect();
        Self::new(self.pp, coeffs).expect("reciprocal of a primitive polynomial is primitive")
    }
}

fn render(coeffs: &[u64], pp: PrimePower) -> String {
    let k = coeffs.len();
    let mut terms = vec![match k {
        1 => "λ".to_string(),
        _ => format!("λ^{k}"),
    }];
    for i in (0..k).rev() {
        let c = coeffs[i];
        if c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "λ".into(),
            _ => format!("λ^{i}"),
        };
        terms.push(match (c, i) {
            (1, 0) => "1".into(),
            (1, _) => var,
            _ => format!("{c}{var}"),
        });
    }
    format!("{} over F_{}", terms.join(" + "), pp.p)
}

impl fmt::Display for PrimitivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.coeffs, self.pp))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    p: u64,
    k: u32,
    coeffs: Vec<u64>,
}

impl Serialize for PrimitivePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            p: self.pp.p,
            k: self.pp.k,
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimitivePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let pp = PrimePower::new(raw.p, raw.k).map_err(serde::de::Error::custom)?;
        PrimitivePoly::new(pp, raw.coeffs).map_err(serde::de::Error::custom)
    }
}

impl PrimitivePoly {
    pub fn from_json(s: &str) -> Result<Self, FieldError> {
        serde_json::from_str(s).map_err(|e| FieldError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}

/// All monic primitive polynomials of degree `k` over F_p, ordered
/// lexicographically on `(a_{k-1}, …, a_0)`.
pub fn enumerate_primitive(pp: PrimePower) -> Vec<PrimitivePoly> {
    let p = pp.p;
    let k = pp.k as usize;
    (0..pp.q)
        .filter_map(|idx| {
            let mut coeffs = vec![0u64; k];
            let mut rest = idx;
            for c in coeffs.iter_mut() {
                *c = rest % p;
                rest /= p;
            }
            // idx's most significant digit is a_{k-1}
            if coeffs[0] == 0 {
                return None;
            }
            let m = monic(&coeffs);
            (irreducible_unchecked(&m, pp) && root_order_is_full(&m, pp)).then(|| PrimitivePoly {
                pp,
                coeffs,
            })
        })
        .collect()
}
