use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::GeneratorSet;
use crate::field::Elem;

/// Edge `from -> gens[gen](from)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: Elem,
    pub gen: usize,
    pub to: Elem,
}

/// BFS predecessor of a node: the node was first reached as `gens[gen](from)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub from: Elem,
    pub gen: usize,
}

/// The part of the graph `a -> f(a)` reachable from the distinguished set by
/// paths of positive length.
///
/// Nodes are kept in discovery order. A distinguished element is a node only
/// if some path of positive length returns to it.
#[derive(Clone, Debug)]
pub struct ReachGraph {
    entries: Vec<Elem>,
    nodes: Vec<Elem>,
    index: HashMap<Elem, usize>,
    dist: Vec<u32>,
    parent: Vec<Step>,
    edges: Vec<Edge>,
}

impl ReachGraph {
    /// BFS seeded with the one-step images of the distinguished set. Seeds are
    /// visited in ascending order and generators in input order.
    pub fn build(set: &GeneratorSet<'_>) -> Self {
        let ctx = set.ctx();
        let entries = set.distinguished_set();
        let mut graph = ReachGraph {
            entries,
            nodes: Vec::new(),
            index: HashMap::new(),
            dist: Vec::new(),
            parent: Vec::new(),
            edges: Vec::new(),
        };

        let mut queue = VecDeque::new();
        for k in 0..graph.entries.len() {
            let d = graph.entries[k];
            for (i, g) in set.generators().iter().enumerate() {
                let t = g.eval(ctx, d);
                if graph.discover(t, 1, Step { from: d, gen: i }) {
                    queue.push_back(t);
                }
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = graph.dist[graph.index[&u]];
            for (i, g) in set.generators().iter().enumerate() {
                let t = g.eval(ctx, u);
                if graph.discover(t, du + 1, Step { from: u, gen: i }) {
                    queue.push_back(t);
                }
            }
        }

        for &d in &graph.entries {
            if !graph.contains(d) {
                for (i, g) in set.generators().iter().enumerate() {
                    graph.edges.push(Edge {
                        from: d,
                        gen: i,
                        to: g.eval(ctx, d),
                    });
                }
            }
        }
        for &u in &graph.nodes {
            for (i, g) in set.generators().iter().enumerate() {
                graph.edges.push(Edge {
                    from: u,
                    gen: i,
                    to: g.eval(ctx, u),
                });
            }
        }
        graph
    }

    fn discover(&mut self, x: Elem, dist: u32, step: Step) -> bool {
        if self.index.contains_key(&x) {
            return false;
        }
        self.index.insert(x, self.nodes.len());
        self.nodes.push(x);
        self.dist.push(dist);
        self.parent.push(step);
        true
    }

    /// The distinguished set, ascending.
    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn nodes(&self) -> &[Elem] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.index.contains_key(&x)
    }

    /// Length of a shortest positive-length path from the distinguished set.
    pub fn dist(&self, x: Elem) -> Option<u32> {
        self.index.get(&x).map(|&k| self.dist[k])
    }

    pub fn parent(&self, x: Elem) -> Option<Step> {
        self.index.get(&x).map(|&k| self.parent[k])
    }

    /// Entry edges out of distinguished elements that are not nodes, then the
    /// out-edges of every node in discovery order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges with both endpoints among the nodes.
    pub fn internal_edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges
            .iter()
            .filter(move |e| self.contains(e.from) && self.contains(e.to))
    }

    /// Shortest path to `target` as `(start, labels)`, labels outermost-first:
    /// `target = f_{labels[0]}(...f_{labels[l-1]}(start)...)`.
    pub fn path_to(&self, target: Elem) -> Option<(Elem, Vec<usize>)> {
        let mut labels = Vec::new();
        let mut cur = target;
        loop {
            let k = *self.index.get(&cur)?;
            let step = self.parent[k];
            labels.push(step.gen);
            if self.dist[k] == 1 {
                return Some((step.from, labels));
            }
            cur = step.from;
        }
    }

    /// For each generator, the largest number of internal edges of that
    /// generator sharing a target node.
    pub fn max_in_degree_per_generator(&self, generators: usize) -> Vec<usize> {
        let mut counts: HashMap<(usize, Elem), usize> = HashMap::new();
        for e in self.internal_edges() {
            *counts.entry((e.gen, e.to)).or_default() += 1;
        }
        (0..generators)
            .map(|g| {
                self.nodes
                    .iter()
                    .map(|&v| counts.get(&(g, v)).copied().unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }
}
