//! Graph criterion for irreducibility of a compositional semigroup generated
//! by monic quadratics.
//!
//! Every element of the semigroup generated by `S` is irreducible iff no `b_f`
//! is a square and no element reachable from `D_S = {-b_f}` by a path of
//! positive length in the graph `a -> f(a)` is a square. Individual words are
//! decided by the chain
//!
//! ```text
//! b_1, f_1(-b_2), f_1(f_2(-b_3)), ...
//! ```
//!
//! which must consist of non-squares, tested in order.

mod dot;
mod graph;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::quadratic::{MonicQuadratic, Word};

pub use dot::{export_dot, generator_name};
pub use graph::{Edge, ReachGraph, Step};

/// A field together with a nonempty, duplicate-free, ordered list of generators.
#[derive(Clone, Debug)]
pub struct GeneratorSet<'a> {
    ctx: &'a FieldCtx,
    gens: Vec<MonicQuadratic>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    AllIrreducible,
    Reducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// Some generator is itself reducible.
    SquareInNegD,
    /// A square is reachable from the distinguished set.
    SquareReachable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub reason: Option<Reason>,
    pub witness: Option<Word>,
}

impl Verdict {
    fn irreducible() -> Self {
        Verdict {
            kind: VerdictKind::AllIrreducible,
            reason: None,
            witness: None,
        }
    }

    fn reducible(reason: Reason, witness: Word) -> Self {
        Verdict {
            kind: VerdictKind::Reducible,
            reason: Some(reason),
            witness: Some(witness),
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.kind == VerdictKind::AllIrreducible
    }
}

impl<'a> GeneratorSet<'a> {
    /// Drops repeated `(a, b)` pairs, keeping first occurrences in order.
    pub fn new(ctx: &'a FieldCtx, gens: impl IntoIterator<Item = MonicQuadratic>) -> Result<Self> {
        let mut unique: Vec<MonicQuadratic> = Vec::new();
        for g in gens {
            if !unique.contains(&g) {
                unique.push(g);
            }
        }
        if unique.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        Ok(GeneratorSet { ctx, gens: unique })
    }

    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    pub fn generators(&self) -> &[MonicQuadratic] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &MonicQuadratic {
        &self.gens[i]
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `{-b_f : f in S}`, deduplicated and ascending.
    pub fn distinguished_set(&self) -> Vec<Elem> {
        let mut d: Vec<Elem> = self.gens.iter().map(|g| self.ctx.neg(g.b)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn reachable_subgraph(&self) -> ReachGraph {
        ReachGraph::build(self)
    }

    fn first_reducible_generator(&self) -> Option<usize> {
        self.gens.iter().position(|g| !g.is_irreducible(self.ctx))
    }

    pub fn check_semigroup_irreducible(&self) -> Verdict {
        if let Some(i) = self.first_reducible_generator() {
            return Verdict::reducible(Reason::SquareInNegD, Word::letter(i));
        }
        self.verdict_from_graph(&self.reachable_subgraph())
    }

    /// Verdict given an already built reachable subgraph of this set.
    pub fn verdict_from_graph(&self, graph: &ReachGraph) -> Verdict {
        if let Some(i) = self.first_reducible_generator() {
            return Verdict::reducible(Reason::SquareInNegD, Word::letter(i));
        }
        match self.witness_word(graph) {
            Ok(w) => Verdict::reducible(Reason::SquareReachable, w),
            Err(_) => Verdict::irreducible(),
        }
    }

    fn validate(&self, word: &Word) -> Result<()> {
        Word::new(word.letters().to_vec(), self.len()).map(|_| ())
    }

    /// `i`-th chain value of `word` for `i < word.len()`: `b_1` for `i = 0`,
    /// otherwise `f_1(...f_i(-b_{i+1})...)`.
    fn chain_value(&self, letters: &[usize], i: usize) -> Elem {
        let next = self.gens[letters[i]];
        if i == 0 {
            return next.b;
        }
        letters[..i]
            .iter()
            .rev()
            .fold(self.ctx.neg(next.b), |x, &j| self.gens[j].eval(self.ctx, x))
    }

    /// Every chain value of `word`, in order.
    pub fn beta_chain(&self, word: &Word) -> Result<Vec<Elem>> {
        self.validate(word)?;
        Ok((0..word.len())
            .map(|i| self.chain_value(word.letters(), i))
            .collect())
    }

    /// Position of the first square in the chain of `word`, if any.
    pub fn first_square_in_chain(&self, word: &Word) -> Result<Option<usize>> {
        self.validate(word)?;
        Ok((0..word.len()).find(|&i| self.ctx.is_square(self.chain_value(word.letters(), i))))
    }

    /// Whether the composition named by `word` is irreducible.
    pub fn word_irreducible(&self, word: &Word) -> Result<bool> {
        Ok(self.first_square_in_chain(word)?.is_none())
    }

    /// Canonical minimal reducible word: a reducible generator if there is
    /// one, otherwise the composition along a shortest path to the first
    /// discovered square, cut at the first square of its chain.
    pub fn witness_word(&self, graph: &ReachGraph) -> Result<Word> {
        if let Some(i) = self.first_reducible_generator() {
            return Ok(Word::letter(i));
        }
        let square = graph
            .nodes()
            .iter()
            .copied()
            .find(|&x| self.ctx.is_square(x))
            .ok_or(Error::NoWitness)?;
        let (start, mut letters) = graph.path_to(square).expect("every node has a BFS path");
        let inner = self
            .gens
            .iter()
            .position(|g| self.ctx.neg(g.b) == start)
            .expect("paths start in the distinguished set");
        letters.push(inner);
        let candidate = Word::new(letters, self.len())?;
        let cut = self
            .first_square_in_chain(&candidate)?
            .expect("chain along a path to a square contains a square");
        Ok(candidate.prefix(cut + 1))
    }

    /// First reducible word of length `<= max_len` in length-then-lexicographic
    /// order, found by direct enumeration of the chain test.
    pub fn first_reducible_word(&self, max_len: usize) -> Option<Word> {
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for i in 0..self.len() {
                    let mut v = w.clone();
                    v.push(i);
                    let word = Word::new(v.clone(), self.len()).expect("valid indices");
                    if !self.word_irreducible(&word).expect("valid word") {
                        return Some(word);
                    }
                    next.push(v);
                }
            }
            layer = next;
        }
        None
    }
}
