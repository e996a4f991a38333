//! Dense polynomials over `F_q` and Rabin's irreducibility test.
//!
//! This is the ground truth the graph criterion is checked against. It knows
//! nothing about generator sets beyond [`crosscheck`], which expands words to
//! dense form and compares verdicts.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::criterion::GeneratorSet;
use crate::error::{Error, Result};
use crate::field::{prime_divisors, Elem, FieldCtx};
use crate::quadratic::{compose_word, enumerate_words, Word};

/// Little-endian coefficient vector with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<Elem>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Elem::ONE)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        DensePoly {
            coeffs: vec![Elem::ZERO, Elem::ONE],
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }
}

/// Polynomial arithmetic over a fixed field.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a> {
    ctx: &'a FieldCtx,
}

impl<'a> PolyRing<'a> {
    pub fn new(ctx: &'a FieldCtx) -> Self {
        PolyRing { ctx }
    }

    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    pub fn add(&self, f: &DensePoly, g: &DensePoly) -> DensePoly {
        let n = f.coeffs.len().max(g.coeffs.len());
        DensePoly::new(
            (0..n)
                .map(|i| self.ctx.add(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, f: &DensePoly, g: &DensePoly) -> DensePoly {
        let n = f.coeffs.len().max(g.coeffs.len());
        DensePoly::new(
            (0..n)
                .map(|i| self.ctx.sub(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, f: &DensePoly, c: Elem) -> DensePoly {
        DensePoly::new(f.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, f: &DensePoly, g: &DensePoly) -> DensePoly {
        if f.is_zero() || g.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Elem::ZERO; f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                out[i + j] = self.ctx.add(out[i + j], self.ctx.mul(a, b));
            }
        }
        DensePoly::new(out)
    }

    pub fn div_rem(&self, f: &DensePoly, g: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        let lead = g.leading().ok_or(Error::ZeroDivisor)?;
        let lead_inv = self.ctx.inv(lead)?;
        let dg = g.coeffs.len() - 1;
        let mut rem = f.coeffs.clone();
        if rem.len() <= dg {
            return Ok((DensePoly::zero(), f.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            let c = self.ctx.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dg] = c;
            for (i, &gi) in g.coeffs.iter().enumerate() {
                let idx = k - dg + i;
                rem[idx] = self.ctx.sub(rem[idx], self.ctx.mul(c, gi));
            }
        }
        rem.truncate(dg);
        Ok((DensePoly::new(quot), DensePoly::new(rem)))
    }

    pub fn rem(&self, f: &DensePoly, g: &DensePoly) -> Result<DensePoly> {
        Ok(self.div_rem(f, g)?.1)
    }

    pub fn make_monic(&self, f: &DensePoly) -> DensePoly {
        match f.leading() {
            None => DensePoly::zero(),
            Some(c) => self.scale(f, self.ctx.inv(c).expect("leading coefficient is nonzero")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &DensePoly, g: &DensePoly) -> DensePoly {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        self.make_monic(&a)
    }

    pub fn mul_mod(&self, f: &DensePoly, g: &DensePoly, m: &DensePoly) -> Result<DensePoly> {
        self.rem(&self.mul(f, g), m)
    }

    pub fn pow_mod(&self, f: &DensePoly, mut n: u64, m: &DensePoly) -> Result<DensePoly> {
        let mut base = self.rem(f, m)?;
        let mut acc = self.rem(&DensePoly::one(), m)?;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m)?;
            }
            n >>= 1;
            if n > 0 {
                base = self.mul_mod(&base, &base, m)?;
            }
        }
        Ok(acc)
    }

    /// `x^(q^k) mod f`, by `k` successive `q`-th powerings.
    pub fn frobenius_power(&self, k: u32, f: &DensePoly) -> Result<DensePoly> {
        check_monic_nonconstant(f)?;
        let q = self.ctx.order() as u64;
        let mut r = self.rem(&DensePoly::x(), f)?;
        for _ in 0..k {
            r = self.pow_mod(&r, q, f)?;
        }
        Ok(r)
    }

    /// Rabin's test: `f` of degree `n` is irreducible iff `x^(q^n) = x mod f`
    /// and `gcd(x^(q^(n/r)) - x, f) = 1` for every prime `r | n`.
    pub fn rabin_irreducible(&self, f: &DensePoly) -> Result<bool> {
        check_monic_nonconstant(f)?;
        let n = f.degree().expect("nonconstant") as u32;
        let x = self.rem(&DensePoly::x(), f)?;
        let q = self.ctx.order() as u64;
        let mut targets: Vec<u32> = prime_divisors(n as u64)
            .into_iter()
            .map(|r| n / r as u32)
            .collect();
        targets.sort_unstable();

        let mut power = x.clone();
        let mut done = 0;
        for &t in &targets {
            while done < t {
                power = self.pow_mod(&power, q, f)?;
                done += 1;
            }
            let h = self.sub(&power, &x);
            if self.gcd(&h, f) != DensePoly::one() {
                return Ok(false);
            }
        }
        while done < n {
            power = self.pow_mod(&power, q, f)?;
            done += 1;
        }
        Ok(power == x)
    }

    pub fn eval(&self, f: &DensePoly, x: Elem) -> Elem {
        f.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.ctx.add(self.ctx.mul(acc, x), c))
    }

    /// Substitution `f(g(x))`.
    pub fn compose(&self, f: &DensePoly, g: &DensePoly) -> DensePoly {
        f.coeffs.iter().rev().fold(DensePoly::zero(), |acc, &c| {
            self.add(&self.mul(&acc, g), &DensePoly::constant(c))
        })
    }
}

fn check_monic_nonconstant(f: &DensePoly) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial),
        Some(_) if !f.is_monic() => Err(Error::NotMonic),
        Some(_) => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub word: Word,
    pub criterion: bool,
    pub oracle: bool,
}

/// Word-by-word comparison of the chain test with Rabin's test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub depth: usize,
    pub words: usize,
    pub mismatches: Vec<Mismatch>,
    pub irreducible_per_length: BTreeMap<usize, usize>,
    pub reducible_per_length: BTreeMap<usize, usize>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn irreducible_total(&self) -> usize {
        self.irreducible_per_length.values().sum()
    }
}

/// Compares `word_irreducible` against Rabin's test on the dense expansion of
/// every word of length `1..=depth`, in length-then-lexicographic order.
pub fn crosscheck(set: &GeneratorSet<'_>, depth: usize) -> Result<CrosscheckReport> {
    if depth == 0 {
        return Err(Error::Config("crosscheck depth must be at least 1".into()));
    }
    let ring = PolyRing::new(set.ctx());
    let words = enumerate_words(set.len(), depth);
    let results: Vec<(Word, bool, bool)> = words
        .into_par_iter()
        .map(|w| {
            let by_chain = set.word_irreducible(&w)?;
            let by_oracle = ring.rabin_irreducible(&compose_word(set, &w))?;
            Ok((w, by_chain, by_oracle))
        })
        .collect::<Result<_>>()?;

    let mut report = CrosscheckReport {
        depth,
        words: results.len(),
        mismatches: Vec::new(),
        irreducible_per_length: (1..=depth).map(|l| (l, 0)).collect(),
        reducible_per_length: (1..=depth).map(|l| (l, 0)).collect(),
    };
    for (word, criterion, oracle) in results {
        let bucket = if oracle {
            &mut report.irreducible_per_length
        } else {
            &mut report.reducible_per_length
        };
        *bucket.entry(word.len()).or_default() += 1;
        if criterion != oracle {
            report.mismatches.push(Mismatch {
                word,
                criterion,
                oracle,
            });
        }
    }
    Ok(report)
}
