use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::braid_core::{enumerate_simples, BraidWord, PermutationBraid};
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;

use super::cycling::{
    cycle, cyclic_sliding, decycle, final_factor, initial_factor, is_periodic, send_to_sc_nf,
    send_to_sss_nf, send_to_uss_nf, ConjugacyWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SummitKind {
    Sss,
    Uss,
    Rsss,
    Sc,
}

impl SummitKind {
    pub const ALL: [SummitKind; 4] = [
        SummitKind::Sss,
        SummitKind::Uss,
        SummitKind::Rsss,
        SummitKind::Sc,
    ];
}

impl fmt::Display for SummitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SummitKind::Sss => "sss",
            SummitKind::Uss => "uss",
            SummitKind::Rsss => "rsss",
            SummitKind::Sc => "sc",
        })
    }
}

impl FromStr for SummitKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sss" => Ok(SummitKind::Sss),
            "uss" => Ok(SummitKind::Uss),
            "rsss" => Ok(SummitKind::Rsss),
            "sc" => Ok(SummitKind::Sc),
            other => Err(Error::Parse(format!("unknown summit kind `{other}`"))),
        }
    }
}

/// How minimal conjugators are found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConjugatorStrategy {
    /// Filter every simple element; exact but `n!` work.
    BruteForce,
    /// Search only the candidates known to contain the minimal ones.
    #[default]
    Fast,
}

#[derive(Clone, Debug)]
pub struct SummitOptions {
    pub vertex_budget: usize,
    pub brute_force_cap: usize,
    pub strategy: ConjugatorStrategy,
}

impl Default for SummitOptions {
    fn default() -> Self {
        Self {
            vertex_budget: 100_000,
            brute_force_cap: 8,
            strategy: ConjugatorStrategy::Fast,
        }
    }
}

/// Membership test for one summit set, fixed by its `(inf, sup)`.
#[derive(Clone, Copy, Debug)]
pub struct SummitSet {
    pub kind: SummitKind,
    pub inf: i64,
    pub sup: i64,
}

impl SummitSet {
    /// The set of `kind` containing `y`; `y` must already belong to it.
    pub fn of(kind: SummitKind, y: &GarsideNormalForm) -> Self {
        Self {
            kind,
            inf: y.inf(),
            sup: y.sup(),
        }
    }

    pub fn contains(&self, y: &GarsideNormalForm) -> bool {
        if y.inf() != self.inf || y.sup() != self.sup {
            return false;
        }
        match self.kind {
            SummitKind::Sss => true,
            SummitKind::Uss => is_periodic(y, cycle),
            SummitKind::Rsss => is_periodic(y, cycle) && is_periodic(y, decycle),
            SummitKind::Sc => is_periodic(y, cyclic_sliding),
        }
    }
}

/// Keep the `≼`-minimal elements among nontrivial simples `s` with
/// `s^{-1} y s` in `set`, scanning `candidates` in nondecreasing length.
fn minimal_among(
    y: &GarsideNormalForm,
    set: &SummitSet,
    candidates: impl IntoIterator<Item = PermutationBraid>,
) -> Vec<PermutationBraid> {
    let mut found: Vec<PermutationBraid> = Vec::new();
    for c in candidates {
        if c.is_identity() || found.iter().any(|m| m.is_prefix_of(&c)) {
            continue;
        }
        if set.contains(&y.conjugate_by_simple(&c)) {
            found.push(c);
        }
    }
    found
}

fn brute_force_minimal(
    y: &GarsideNormalForm,
    set: &SummitSet,
    cap: usize,
) -> Result<Vec<PermutationBraid>> {
    let mut all = enumerate_simples(y.strands(), cap)?;
    all.sort_by_key(|s| s.len());
    Ok(minimal_among(y, set, all))
}

/// `a \\ b = a^{-1}(a ∨ b)`, the least simple `r` with `b ≼ a r`.
fn residual(a: &PermutationBraid, b: &PermutationBraid) -> PermutationBraid {
    a.left_divide(&a.join(b)).expect("a ≼ a ∨ b")
}

/// Closure onto super summit conjugators: `close(t)` is the least simple
/// `s ≽ t` with `s^{-1} y s` in the super summit set of `y`.
struct SssClosure {
    p: i64,
    factors: Vec<PermutationBraid>,
    p_inv: i64,
    factors_inv: Vec<PermutationBraid>,
}

impl SssClosure {
    fn new(y: &GarsideNormalForm) -> Self {
        let yi = y.inverse();
        Self {
            p: y.delta_power(),
            factors: y.factors().to_vec(),
            p_inv: yi.delta_power(),
            factors_inv: yi.factors().to_vec(),
        }
    }

    /// Least `s ≽ t` with `inf(s^{-1} x s) ≥ p` for `x = Δ^p x'`, i.e.
    /// `τ^p(s) ≼ x' s`.
    fn raise_inf(
        p: i64,
        factors: &[PermutationBraid],
        mut t: PermutationBraid,
    ) -> PermutationBraid {
        loop {
            let r = factors.iter().fold(t.tau_power(p), |u, f| residual(f, &u));
            let next = t.join(&r);
            if next == t {
                return t;
            }
            t = next;
        }
    }

    fn close(&self, mut t: PermutationBraid) -> PermutationBraid {
        loop {
            let a = Self::raise_inf(self.p, &self.factors, t.clone());
            // sup(s^{-1} y s) = -inf(s^{-1} y^{-1} s)
            let b = Self::raise_inf(self.p_inv, &self.factors_inv, a);
            if b == t {
                return t;
            }
            t = b;
        }
    }
}

/// The conjugators into each of these sets are closed under `∧`, so above
/// every `σ_i` there is a unique minimal one. It is found by walking super
/// summit conjugators upward in length order. `admissible` is a
/// prefix-closed set known to contain all minimal conjugators.
fn minimal_by_closure(
    y: &GarsideNormalForm,
    set: &SummitSet,
    admissible: impl Fn(&PermutationBraid) -> bool,
) -> Vec<PermutationBraid> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = y.strands();
    let cl = SssClosure::new(y);
    let gens: Vec<PermutationBraid> = (1..n).map(|i| PermutationBraid::generator(n, i)).collect();
    let mut hits: Vec<PermutationBraid> = Vec::new();
    for g in &gens {
        let start = cl.close(g.clone());
        if !admissible(&start) {
            continue;
        }
        let mut heap = BinaryHeap::new();
        let mut seen = HashSet::new();
        seen.insert(start.clone());
        heap.push(Reverse((start.len(), start)));
        while let Some(Reverse((_, t))) = heap.pop() {
            if set.kind == SummitKind::Sss || set.contains(&y.conjugate_by_simple(&t)) {
                hits.push(t);
                break;
            }
            for h in &gens {
                if let Some(u) = t.product(h) {
                    let c = cl.close(u);
                    if admissible(&c) && seen.insert(c.clone()) {
                        heap.push(Reverse((c.len(), c)));
                    }
                }
            }
        }
    }
    hits.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    hits.dedup();
    hits.iter()
        .filter(|s| !hits.iter().any(|t| t != *s && t.is_prefix_of(s)))
        .cloned()
        .collect()
}

/// All `≼`-minimal nontrivial simples `s` with `s^{-1} y s` in the same set.
pub fn minimal_conjugators(
    y: &GarsideNormalForm,
    kind: SummitKind,
    opts: &SummitOptions,
) -> Result<Vec<PermutationBraid>> {
    let set = SummitSet::of(kind, y);
    if !set.contains(y) {
        return Err(Error::InvalidArgument(format!(
            "{y} does not belong to its {kind} set"
        )));
    }
    let n = y.strands();
    let mut out = match opts.strategy {
        ConjugatorStrategy::BruteForce => brute_force_minimal(y, &set, opts.brute_force_cap)?,
        ConjugatorStrategy::Fast if y.factors().is_empty() => {
            (1..n).map(|i| PermutationBraid::generator(n, i)).collect()
        }
        ConjugatorStrategy::Fast => match kind {
            SummitKind::Sss => minimal_by_closure(y, &set, |_| true),
            // each minimal conjugator is a prefix of ι(y) or of ι(y^{-1}) = ∂(φ(y))
            SummitKind::Uss | SummitKind::Sc => {
                let a = initial_factor(y);
                let b = final_factor(y).right_complement();
                minimal_by_closure(y, &set, |s| s.is_prefix_of(&a) || s.is_prefix_of(&b))
            }
            SummitKind::Rsss => brute_force_minimal(y, &set, opts.brute_force_cap)?,
        },
    };
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummitEdge {
    pub from: usize,
    pub label: PermutationBraid,
    pub to: usize,
}

/// A summit set with its minimal-conjugator arrows. Vertex witnesses are
/// conjugators from `seed`.
#[derive(Clone, Debug)]
pub struct SummitGraph {
    pub kind: SummitKind,
    pub seed: GarsideNormalForm,
    pub vertices: Vec<ConjugacyWitness>,
    pub edges: Vec<SummitEdge>,
    index: HashMap<GarsideNormalForm, usize>,
}

impl SummitGraph {
    fn new(kind: SummitKind, seed: GarsideNormalForm) -> Self {
        Self {
            kind,
            seed,
            vertices: Vec::new(),
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn add_vertex(&mut self, w: ConjugacyWitness) -> (usize, bool) {
        if let Some(&i) = self.index.get(&w.element) {
            return (i, false);
        }
        let i = self.vertices.len();
        self.index.insert(w.element.clone(), i);
        self.vertices.push(w);
        (i, true)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, y: &GarsideNormalForm) -> bool {
        self.index.contains_key(y)
    }

    pub fn position(&self, y: &GarsideNormalForm) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn witness(&self, y: &GarsideNormalForm) -> Option<&ConjugacyWitness> {
        self.position(y).map(|i| &self.vertices[i])
    }

    pub fn elements(&self) -> impl Iterator<Item = &GarsideNormalForm> {
        self.vertices.iter().map(|w| &w.element)
    }

    /// Vertex set as a hash set, for comparisons independent of discovery order.
    pub fn element_set(&self) -> HashSet<GarsideNormalForm> {
        self.elements().cloned().collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }

    /// Re-verify every witness and every edge by direct conjugation.
    pub fn verify(&self) -> bool {
        self.vertices.iter().all(|w| w.verify(&self.seed))
            && self.edges.iter().all(|e| {
                self.vertices[e.from].element.conjugate_by_simple(&e.label)
                    == self.vertices[e.to].element
            })
    }

    /// Edge list, one `from TAB label TAB to` line per edge.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                self.vertices[e.from].element, e.label, self.vertices[e.to].element
            ));
        }
        out
    }
}

/// Move `x` into the summit set of the given kind. For RSSS this walks the
/// super summit set, so it is only as cheap as that set is small.
pub fn send_to(
    x: &GarsideNormalForm,
    kind: SummitKind,
    opts: &SummitOptions,
) -> Result<ConjugacyWitness> {
    match kind {
        SummitKind::Sss => send_to_sss_nf(x),
        SummitKind::Uss => send_to_uss_nf(x),
        SummitKind::Sc => send_to_sc_nf(x),
        SummitKind::Rsss => {
            let g = explore(x, SummitKind::Sss, opts, None)?.0;
            let set = SummitSet::of(SummitKind::Rsss, &g.vertices[0].element);
            g.vertices
                .into_iter()
                .find(|w| set.contains(&w.element))
                .ok_or_else(|| Error::Invariant("reduced super summit set is empty".into()))
        }
    }
}

/// Closure search from `x`. Stops early with the vertex equal to `target`
/// when one is given and found.
fn explore(
    x: &GarsideNormalForm,
    kind: SummitKind,
    opts: &SummitOptions,
    target: Option<&GarsideNormalForm>,
) -> Result<(SummitGraph, Option<usize>)> {
    if kind == SummitKind::Rsss {
        return explore_rsss(x, opts, target);
    }
    let start = send_to(x, kind, opts)?;
    let mut g = SummitGraph::new(kind, x.clone());
    let mut queue = VecDeque::new();
    let (i0, _) = g.add_vertex(start);
    queue.push_back(i0);
    while let Some(v) = queue.pop_front() {
        if let Some(t) = target {
            if &g.vertices[v].element == t {
                return Ok((g, Some(v)));
            }
        }
        let y = g.vertices[v].clone();
        for s in minimal_conjugators(&y.element, kind, opts)? {
            let (to, fresh) = g.add_vertex(y.then_simple(&s));
            g.edges.push(SummitEdge {
                from: v,
                label: s,
                to,
            });
            if fresh {
                queue.push_back(to);
            }
        }
        if g.vertices.len() > opts.vertex_budget {
            let frontier = queue
                .iter()
                .map(|&i| g.vertices[i].element.clone())
                .collect();
            return Err(Error::VertexBudget {
                budget: opts.vertex_budget,
                partial: Box::new(g),
                frontier,
            });
        }
    }
    Ok((g, None))
}

/// RSSS is cut out of the super summit set by periodicity under both
/// cycling and decycling; arrows are its own minimal conjugators.
fn explore_rsss(
    x: &GarsideNormalForm,
    opts: &SummitOptions,
    target: Option<&GarsideNormalForm>,
) -> Result<(SummitGraph, Option<usize>)> {
    let sss = explore(x, SummitKind::Sss, opts, None)?.0;
    let set = SummitSet::of(SummitKind::Rsss, &sss.vertices[0].element);
    let mut g = SummitGraph::new(SummitKind::Rsss, x.clone());
    for w in &sss.vertices {
        if set.contains(&w.element) {
            g.add_vertex(w.clone());
        }
    }
    for v in 0..g.vertices.len() {
        let y = g.vertices[v].element.clone();
        for s in minimal_conjugators(&y, SummitKind::Rsss, opts)? {
            let to = g
                .position(&y.conjugate_by_simple(&s))
                .ok_or_else(|| Error::Invariant("RSSS arrow leaves the set".into()))?;
            g.edges.push(SummitEdge {
                from: v,
                label: s,
                to,
            });
        }
    }
    let hit = target.and_then(|t| g.position(t));
    Ok((g, hit))
}

pub fn compute_summit_graph_with(
    x: &BraidWord,
    kind: SummitKind,
    opts: &SummitOptions,
) -> Result<SummitGraph> {
    explore(&GarsideNormalForm::of(x), kind, opts, None).map(|(g, _)| g)
}

pub fn compute_summit_graph(x: &BraidWord, kind: SummitKind) -> Result<SummitGraph> {
    compute_summit_graph_with(x, kind, &SummitOptions::default())
}

/// A `v` with `v^{-1} x v = y`, or `None` when `x` and `y` are not conjugate.
pub fn conjugacy_search_with(
    x: &BraidWord,
    y: &BraidWord,
    kind: SummitKind,
    opts: &SummitOptions,
) -> Result<Option<BraidWord>> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch {
            left: x.strands(),
            right: y.strands(),
        });
    }
    let xn = GarsideNormalForm::of(x);
    let yn = GarsideNormalForm::of(y);
    if x.exponent_sum() != y.exponent_sum() {
        return Ok(None);
    }
    let wy = send_to(&yn, kind, opts)?;
    let wx = send_to(&xn, kind, opts)?;
    if (wx.element.inf(), wx.element.sup()) != (wy.element.inf(), wy.element.sup()) {
        return Ok(None);
    }
    let (g, hit) = explore(&xn, kind, opts, Some(&wy.element))?;
    Ok(hit.map(|i| g.vertices[i].conjugator.concat(&wy.conjugator.inverse())))
}

pub fn conjugacy_search(
    x: &BraidWord,
    y: &BraidWord,
    kind: SummitKind,
) -> Result<Option<BraidWord>> {
    conjugacy_search_with(x, y, kind, &SummitOptions::default())
}

pub fn conjugacy_decide(x: &BraidWord, y: &BraidWord, kind: SummitKind) -> Result<bool> {
    conjugacy_search(x, y, kind).map(|v| v.is_some())
}
