//! Arithmetic in odd finite fields `F_q`, `q = p^e`.
//!
//! Elements are encoded as integers in `[0, q)`. For `e > 1` the base-`p`
//! digits of the encoding, little-endian, are the coefficients of the element
//! as a polynomial in the generator of `F_p[t] / (modulus)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{DensePoly, PolyRing};

/// Largest order for which the residue table is materialized.
pub const SQUARE_TABLE_LIMIT: u32 = 1 << 20;

/// Largest order of an extension field for which log/exp tables are built.
const LOG_TABLE_LIMIT: u32 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable description of `F_q` for odd `q`.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    squares: Option<Vec<bool>>,
    logs: Option<LogTables>,
}

/// Field description as it appears in JSON inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "default_degree")]
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

fn default_degree() -> u32 {
    1
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        FieldCtx::new(self.p, self.e, self.modulus.as_deref())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// Builds `F_{p^e}`. Without a modulus and `e > 1`, the lexicographically
    /// smallest monic irreducible of degree `e` is used, comparing coefficient
    /// tuples from the constant term up.
    pub fn new(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(if p == 2 {
                Error::EvenCharacteristic(p)
            } else {
                Error::NotPrime(p)
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128)
            .checked_pow(e)
            .filter(|&q| q <= u32::MAX as u128)
            .ok_or(Error::FieldTooLarge { p, e })? as u32;
        let p = p as u32;

        let modulus = match modulus {
            Some(m) => {
                let m = validate_modulus(p, e, m)?;
                if e > 1 && !modulus_irreducible(p, &m)? {
                    return Err(Error::ReducibleModulus(p as u64));
                }
                m
            }
            None if e == 1 => vec![0, 1],
            None => smallest_irreducible(p, e)?,
        };

        let mut ctx = FieldCtx {
            p,
            e,
            q,
            modulus,
            squares: None,
            logs: None,
        };
        if e > 1 && q <= LOG_TABLE_LIMIT {
            ctx.logs = Some(ctx.build_logs());
        }
        if q <= SQUARE_TABLE_LIMIT {
            let mut table = vec![false; q as usize];
            for x in ctx.elements() {
                table[ctx.mul(x, x).0 as usize] = true;
            }
            ctx.squares = Some(table);
        }
        Ok(ctx)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Little-endian coefficients of the defining polynomial, length `e + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn has_square_table(&self) -> bool {
        self.squares.is_some()
    }

    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value < self.q as u64 {
            Ok(Elem(value as u32))
        } else {
            Err(Error::ElementOutOfRange {
                value: value as i64,
                q: self.q,
            })
        }
    }

    /// Decodes a signed integer: `v >= 0` is an encoding, `v < 0` denotes the
    /// negation of the element encoded by `|v|`.
    pub fn elem_signed(&self, value: i64) -> Result<Elem> {
        let out_of_range = Error::ElementOutOfRange { value, q: self.q };
        let magnitude = value.unsigned_abs();
        if magnitude >= self.q as u64 {
            return Err(out_of_range);
        }
        let x = Elem(magnitude as u32);
        Ok(if value < 0 { self.neg(x) } else { x })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    /// The element `t` whose powers span `F_q` over `F_p`; equals `0` in a prime field.
    pub fn generator(&self) -> Elem {
        if self.e == 1 {
            Elem(0)
        } else {
            Elem(self.p)
        }
    }

    pub fn digits(&self, x: Elem) -> Vec<u32> {
        let mut v = x.0;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        let mut v: u32 = 0;
        for &d in digits.iter().rev() {
            v = v * self.p + d % self.p;
        }
        Elem(v)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.e == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Elem((s % self.p as u64) as u32);
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.e == 1 {
            return if a.0 == 0 { a } else { Elem(self.p - a.0) };
        }
        self.digitwise(a, Elem(0), |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.e == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        match &self.logs {
            Some(t) => {
                let n = self.q - 1;
                let s = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % n as u64;
                Elem(t.exp[s as usize])
            }
            None => self.poly_mul(a, b),
        }
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        if let Some(t) = &self.logs {
            let n = self.q - 1;
            let l = t.log[a.0 as usize];
            return Ok(Elem(t.exp[((n - l) % n) as usize]));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `1/2`, which exists because `q` is odd.
    pub fn half(&self) -> Elem {
        Elem(self.p.div_ceil(2))
    }

    pub fn is_square(&self, x: Elem) -> bool {
        match &self.squares {
            Some(t) => t[x.0 as usize],
            None => self.is_square_euler(x),
        }
    }

    /// Euler's criterion, independent of the residue table.
    pub fn is_square_euler(&self, x: Elem) -> bool {
        x.0 == 0 || self.pow(x, (self.q as u64 - 1) / 2) == Elem(1)
    }

    fn digitwise(&self, a: Elem, b: Elem, op: impl Fn(u32, u32) -> u32) -> Elem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out: u32 = 0;
        let mut place: u32 = 1;
        for i in 0..self.e {
            out += op(x % self.p, y % self.p) * place;
            x /= self.p;
            y /= self.p;
            if i + 1 < self.e {
                place *= self.p;
            }
        }
        Elem(out)
    }

    fn poly_mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u64;
        let e = self.e as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let t = (c * m as u64) % p;
                prod[k - e + i] = (prod[k - e + i] + p - t) % p;
            }
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits)
    }

    fn build_logs(&self) -> LogTables {
        let n = self.q - 1;
        let factors = prime_divisors(n as u64);
        let primitive = (2..self.q)
            .map(Elem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.slow_pow(g, n as u64 / r) != Elem(1))
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = Elem(1);
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x.0;
            log[x.0 as usize] = k as u32;
            x = self.poly_mul(x, primitive);
        }
        LogTables { exp, log }
    }

    fn slow_pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            n >>= 1;
        }
        acc
    }
}

fn validate_modulus(p: u32, e: u32, m: &[u64]) -> Result<Vec<u32>> {
    if m.len() != e as usize + 1 {
        return Err(Error::BadModulus(format!(
            "expected {} coefficients, got {}",
            e + 1,
            m.len()
        )));
    }
    if let Some(&c) = m.iter().find(|&&c| c >= p as u64) {
        return Err(Error::BadModulus(format!(
            "coefficient {c} not reduced mod {p}"
        )));
    }
    if m[e as usize] != 1 {
        return Err(Error::BadModulus("not monic".into()));
    }
    Ok(m.iter().map(|&c| c as u32).collect())
}

fn modulus_irreducible(p: u32, m: &[u32]) -> Result<bool> {
    let base = FieldCtx::prime(p as u64)?;
    let poly = DensePoly::new(m.iter().map(|&c| Elem(c)).collect());
    PolyRing::new(&base).rabin_irreducible(&poly)
}

fn smallest_irreducible(p: u32, e: u32) -> Result<Vec<u32>> {
    let base = FieldCtx::prime(p as u64)?;
    let ring = PolyRing::new(&base);
    let count = (p as u64).pow(e);
    for idx in 0..count {
        // The constant term is the most significant position of the tuple.
        let mut coeffs = vec![0u32; e as usize + 1];
        let mut v = idx;
        for slot in coeffs[..e as usize].iter_mut().rev() {
            *slot = (v % p as u64) as u32;
            v /= p as u64;
        }
        coeffs[e as usize] = 1;
        let poly = DensePoly::new(coeffs.iter().map(|&c| Elem(c)).collect());
        if ring.rabin_irreducible(&poly)? {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
