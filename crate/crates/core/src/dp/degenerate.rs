//! Ordering-based DP for maximum induced d-degenerate subgraphs.
//!
//! A set is d-degenerate exactly when it can be linearly ordered so that
//! every vertex has at most `d` smaller neighbors. The state at a node
//! with bag B is a triple `(X, sigma, f)`: the chosen vertices `X` of B,
//! the restriction `sigma` of the solution ordering to `X`, and a budget
//! `f(a)` of smaller solution neighbors each `a` may still collect from
//! the already-forgotten region. `phi[X, sigma, f]` is the largest
//! compatible choice inside the component below the node.
//!
//! Transitions:
//! * leaf — single state, value 0;
//! * introduce u — drop `u` from the key and read the child;
//! * forget u — either `u` stays out (copy), or `u` enters the solution:
//!   it is inserted at every position of `sigma`; members after `u` that
//!   are adjacent to it give up one budget unit, and `u` starts with
//!   `d - l` where `l` counts its adjacent members before it;
//! * join — split the budgets between the two children.
//!
//! `phi` is monotone in `f`, so the forget and join transitions only
//! evaluate the equality cases of their bounds; the full engine can also
//! run the literal `<=` enumeration as a reference.

use super::{SolveOptions, MAX_BAG};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::td::{NiceTreeDecomposition, NodeKind};
use fnv::FnvHashMap;
use itertools::Itertools;

type Value = u16;

/// Key with global vertex ids, used while applying transitions.
#[derive(Clone, Copy, Debug)]
pub(crate) struct KeyBuf {
    order: [u16; MAX_BAG],
    budget: [u8; MAX_BAG],
    len: usize,
}

/// Bag-local packed form, used as the hash key inside one node's table.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Packed {
    xmask: u16,
    sigma: u64,
    f: u64,
}

impl KeyBuf {
    pub(crate) fn empty() -> Self {
        KeyBuf { order: [0; MAX_BAG], budget: [0; MAX_BAG], len: 0 }
    }

    pub(crate) fn from_parts(order: &[usize], budget: &[u8]) -> Self {
        assert_eq!(order.len(), budget.len());
        assert!(order.len() <= MAX_BAG);
        let mut k = KeyBuf::empty();
        for (i, (&v, &b)) in order.iter().zip(budget).enumerate() {
            k.order[i] = v as u16;
            k.budget[i] = b;
        }
        k.len = order.len();
        k
    }

    fn position_of(&self, v: usize) -> Option<usize> {
        self.order[..self.len].iter().position(|&o| o as usize == v)
    }

    fn removed(&self, pos: usize) -> KeyBuf {
        let mut out = KeyBuf::empty();
        let mut j = 0;
        for i in 0..self.len {
            if i != pos {
                out.order[j] = self.order[i];
                out.budget[j] = self.budget[i];
                j += 1;
            }
        }
        out.len = j;
        out
    }

    fn inserted(&self, pos: usize, v: u16, fv: u8) -> KeyBuf {
        debug_assert!(self.len < MAX_BAG && pos <= self.len);
        let mut out = KeyBuf::empty();
        let mut j = 0;
        for i in 0..=self.len {
            if i == pos {
                out.order[j] = v;
                out.budget[j] = fv;
                j += 1;
            }
            if i < self.len {
                out.order[j] = self.order[i];
                out.budget[j] = self.budget[i];
                j += 1;
            }
        }
        out.len = j;
        out
    }

    fn pack(&self, bag: &[usize]) -> Packed {
        let mut p = Packed { xmask: 0, sigma: 0, f: 0 };
        for i in 0..self.len {
            let local = bag
                .binary_search(&(self.order[i] as usize))
                .expect("key member missing from bag") as u64;
            p.xmask |= 1 << local;
            p.sigma |= local << (4 * i);
            p.f |= (self.budget[i] as u64) << (4 * i);
        }
        p
    }

    fn members(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.order[..self.len].iter().map(|&v| v as usize).collect();
        m.sort_unstable();
        m
    }
}

/// Child key for the `u`-enters-the-solution branch of forget, with `u`
/// inserted at `pos`; `None` when a budget constraint rules the position
/// out.
fn forget_child_key(g: &Graph, d: u8, u: usize, key: &KeyBuf, pos: usize) -> Option<KeyBuf> {
    let mut earlier_neighbors = 0u8;
    for i in 0..key.len {
        let a = key.order[i] as usize;
        if g.has_edge(u, a) {
            if i < pos {
                earlier_neighbors += 1;
            } else if key.budget[i] == 0 {
                return None;
            }
        }
    }
    if earlier_neighbors > d {
        return None;
    }
    let mut child = key.inserted(pos, u as u16, d - earlier_neighbors);
    for i in pos..key.len {
        if g.has_edge(u, key.order[i] as usize) {
            child.budget[i + 1] -= 1;
        }
    }
    Some(child)
}

/// Demand-driven engine: evaluates only the states reachable from the
/// root query. Introduce nodes project keys without owning a table;
/// nodes with an empty component answer 0; nodes with a single-vertex
/// component are recomputed instead of memoized (they carry the bulk of
/// the reachable states but their children are all constant).
struct Demand<'a> {
    g: &'a Graph,
    nice: &'a NiceTreeDecomposition,
    d: u8,
    alpha: Vec<usize>,
    memo: Vec<FnvHashMap<Packed, Value>>,
}

impl<'a> Demand<'a> {
    fn new(g: &'a Graph, nice: &'a NiceTreeDecomposition, d: u8) -> Self {
        let alpha = nice.component_sizes();
        let memo = (0..nice.len()).map(|_| FnvHashMap::default()).collect();
        Demand { g, nice, d, alpha, memo }
    }

    fn project(&self, mut x: usize, mut key: KeyBuf) -> (usize, KeyBuf) {
        while let NodeKind::Introduce(u) = self.nice.kind(x) {
            if let Some(pos) = key.position_of(u) {
                key = key.removed(pos);
            }
            x = self.nice.children(x)[0];
        }
        (x, key)
    }

    fn phi(&mut self, x: usize, key: KeyBuf) -> Value {
        if self.alpha[x] == 0 {
            return 0;
        }
        let (x, key) = self.project(x, key);
        let memoize = self.alpha[x] >= 2;
        let packed = if memoize { Some(key.pack(self.nice.bag(x))) } else { None };
        if let Some(p) = packed {
            if let Some(&v) = self.memo[x].get(&p) {
                return v;
            }
        }
        let val = match self.nice.kind(x) {
            NodeKind::Leaf | NodeKind::Introduce(_) => unreachable!("empty component handled"),
            NodeKind::Forget(u) => self.forget_value(x, u, &key),
            NodeKind::Join => self.join_value(x, &key),
        };
        if let Some(p) = packed {
            self.memo[x].insert(p, val);
        }
        val
    }

    fn forget_value(&mut self, x: usize, u: usize, key: &KeyBuf) -> Value {
        let child = self.nice.children(x)[0];
        let mut best = self.phi(child, *key);
        for pos in 0..=key.len {
            if let Some(child_key) = forget_child_key(self.g, self.d, u, key, pos) {
                best = best.max(1 + self.phi(child, child_key));
            }
        }
        best
    }

    fn join_value(&mut self, x: usize, key: &KeyBuf) -> Value {
        let (left, right) = {
            let kids = self.nice.children(x);
            (kids[0], kids[1])
        };
        let mut best = 0;
        let mut split = [0u8; MAX_BAG];
        loop {
            let ky = KeyBuf { order: key.order, budget: split, len: key.len };
            let mut rest = *key;
            for i in 0..key.len {
                rest.budget[i] -= split[i];
            }
            best = best.max(self.phi(left, ky) + self.phi(right, rest));
            let mut i = 0;
            loop {
                if i == key.len {
                    return best;
                }
                if split[i] < key.budget[i] {
                    split[i] += 1;
                    break;
                }
                split[i] = 0;
                i += 1;
            }
        }
    }

    /// Reconstructs a witness by re-deriving, at every node on the way
    /// down, the first transition branch that achieves the stored value
    /// (copy before insertions, positions ascending, splits in odometer
    /// order).
    fn walk(&mut self, x: usize, key: KeyBuf, out: &mut Vec<usize>) {
        if self.alpha[x] == 0 {
            return;
        }
        let (x, key) = self.project(x, key);
        let target = self.phi(x, key);
        match self.nice.kind(x) {
            NodeKind::Leaf | NodeKind::Introduce(_) => unreachable!("empty component handled"),
            NodeKind::Forget(u) => {
                let child = self.nice.children(x)[0];
                if self.phi(child, key) == target {
                    return self.walk(child, key, out);
                }
                for pos in 0..=key.len {
                    if let Some(child_key) = forget_child_key(self.g, self.d, u, &key, pos) {
                        if 1 + self.phi(child, child_key) == target {
                            out.push(u);
                            return self.walk(child, child_key, out);
                        }
                    }
                }
                unreachable!("no branch achieves the stored value");
            }
            NodeKind::Join => {
                let (left, right) = {
                    let kids = self.nice.children(x);
                    (kids[0], kids[1])
                };
                let mut split = [0u8; MAX_BAG];
                loop {
                    let ky = KeyBuf { order: key.order, budget: split, len: key.len };
                    let mut rest = key;
                    for i in 0..key.len {
                        rest.budget[i] -= split[i];
                    }
                    if self.phi(left, ky) + self.phi(right, rest) == target {
                        self.walk(left, ky, out);
                        self.walk(right, rest, out);
                        return;
                    }
                    let mut i = 0;
                    loop {
                        if i == key.len {
                            unreachable!("no split achieves the stored value");
                        }
                        if split[i] < key.budget[i] {
                            split[i] += 1;
                            break;
                        }
                        split[i] = 0;
                        i += 1;
                    }
                }
            }
        }
    }
}

/// Maximum induced d-degenerate set, via the decomposition. Returns the
/// witness; `solve` wraps it with the certificate check.
pub fn solve_degenerate(
    g: &Graph,
    nice: &NiceTreeDecomposition,
    d: usize,
    opts: SolveOptions,
) -> Result<VertexSet> {
    super::prepare(g, nice, &opts)?;
    if g.n() > u16::MAX as usize {
        return Err(Error::Invalid("instance too large for 16-bit DP values".into()));
    }
    // degeneracy never exceeds treewidth, so d >= width accepts everything
    if d >= nice.width() {
        return Ok(VertexSet::full(g.n()));
    }
    if opts.full_tables {
        let tables = FullTables::build(g, nice, d, opts)?;
        return tables.witness(g, nice);
    }
    let mut engine = Demand::new(g, nice, d as u8);
    let size = engine.phi(nice.root(), KeyBuf::empty());
    let mut picked = Vec::new();
    engine.walk(nice.root(), KeyBuf::empty(), &mut picked);
    if picked.len() != size as usize {
        return Err(Error::Invalid(format!(
            "internal: traceback produced {} vertices for value {size}",
            picked.len()
        )));
    }
    Ok(VertexSet::new(picked))
}

/// Closed-form number of `(X, sigma, f)` keys over a bag of size `b`.
pub fn key_space_size(b: usize, d: usize) -> u128 {
    let mut total = 0u128;
    let mut falling = 1u128; // b * (b-1) * ... = C(b,j) * j!
    let mut pow = 1u128;
    for j in 0..=b {
        total += falling * pow;
        falling *= (b - j) as u128;
        pow *= (d + 1) as u128;
    }
    total
}

const FULL_TABLE_KEY_LIMIT: u128 = 2_000_000;

/// One decoded table row of the full engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub chosen: Vec<usize>,
    pub order: Vec<usize>,
    pub budgets: Vec<u8>,
    pub value: u16,
}

/// Bottom-up engine materializing the complete table of every node.
pub struct FullTables {
    d: u8,
    prune: bool,
    tables: Vec<FnvHashMap<Packed, Value>>,
}

impl FullTables {
    pub fn build(
        g: &Graph,
        nice: &NiceTreeDecomposition,
        d: usize,
        opts: SolveOptions,
    ) -> Result<Self> {
        super::prepare(g, nice, &opts)?;
        if d > 15 {
            return Err(Error::Invalid("degeneracy parameter above packed-key limit 15".into()));
        }
        for x in 0..nice.len() {
            if key_space_size(nice.bag(x).len(), d) > FULL_TABLE_KEY_LIMIT {
                return Err(Error::Invalid(format!(
                    "full tables over bag of size {} with d={d} exceed the key limit",
                    nice.bag(x).len()
                )));
            }
        }
        let mut ft = FullTables {
            d: d as u8,
            prune: opts.prune_dominated,
            tables: (0..nice.len()).map(|_| FnvHashMap::default()).collect(),
        };
        for x in nice.as_tree().post_order() {
            ft.fill(g, nice, x, opts.literal_transitions);
            if ft.prune {
                ft.prune_node(x, nice.bag(x).len());
            }
        }
        Ok(ft)
    }

    fn fill(&mut self, g: &Graph, nice: &NiceTreeDecomposition, x: usize, literal: bool) {
        let bag = nice.bag(x);
        match nice.kind(x) {
            NodeKind::Leaf => {
                self.tables[x].insert(KeyBuf::empty().pack(bag), 0);
            }
            NodeKind::Introduce(u) => {
                let child = nice.children(x)[0];
                let cbag = nice.bag(child).to_vec();
                for_each_key(bag, self.d, |key| {
                    let val = match key.position_of(u) {
                        Some(pos) => self.lookup(child, &cbag, &key.removed(pos)),
                        None => self.lookup(child, &cbag, key),
                    };
                    self.tables[x].insert(key.pack(bag), val);
                });
            }
            NodeKind::Forget(u) => {
                let child = nice.children(x)[0];
                let cbag = nice.bag(child).to_vec();
                for_each_key(bag, self.d, |key| {
                    let mut best = self.lookup(child, &cbag, key);
                    for pos in 0..=key.len {
                        if let Some(ck) = forget_child_key(g, self.d, u, key, pos) {
                            if literal {
                                // every f'' below the per-position bounds
                                for_each_below(&ck, |k2| {
                                    best = best.max(1 + self.lookup(child, &cbag, k2));
                                });
                            } else {
                                best = best.max(1 + self.lookup(child, &cbag, &ck));
                            }
                        }
                    }
                    self.tables[x].insert(key.pack(bag), best);
                });
            }
            NodeKind::Join => {
                let kids = nice.children(x);
                let (l, r) = (kids[0], kids[1]);
                for_each_key(bag, self.d, |key| {
                    let mut best = 0;
                    for_each_below(key, |ky| {
                        let vy = self.lookup(l, bag, ky);
                        if literal {
                            let mut gap = *key;
                            for i in 0..key.len {
                                gap.budget[i] -= ky.budget[i];
                            }
                            for_each_below(&gap, |kz| {
                                best = best.max(vy + self.lookup(r, bag, kz));
                            });
                        } else {
                            let mut kz = *key;
                            for i in 0..key.len {
                                kz.budget[i] -= ky.budget[i];
                            }
                            best = best.max(vy + self.lookup(r, bag, &kz));
                        }
                    });
                    self.tables[x].insert(key.pack(bag), best);
                });
            }
        }
    }

    /// Exact lookup, falling back to the best dominating entry when the
    /// table was pruned.
    fn lookup(&self, node: usize, bag: &[usize], key: &KeyBuf) -> Value {
        let packed = key.pack(bag);
        if let Some(&v) = self.tables[node].get(&packed) {
            return v;
        }
        debug_assert!(self.prune, "missing key in unpruned table");
        self.tables[node]
            .iter()
            .filter(|(p, _)| {
                p.xmask == packed.xmask
                    && p.sigma == packed.sigma
                    && (0..key.len).all(|i| (p.f >> (4 * i) & 0xf) <= (packed.f >> (4 * i) & 0xf))
            })
            .map(|(_, &v)| v)
            .max()
            .unwrap_or(0)
    }

    fn prune_node(&mut self, x: usize, bag_len: usize) {
        let mut keys: Vec<(Packed, Value)> = self.tables[x].iter().map(|(p, &v)| (*p, v)).collect();
        let f_sum = |p: &Packed| (0..bag_len).map(|i| p.f >> (4 * i) & 0xf).sum::<u64>();
        keys.sort_by_key(|(p, _)| (p.xmask, p.sigma, f_sum(p), p.f));
        let mut kept: Vec<(Packed, Value)> = Vec::with_capacity(keys.len());
        for (p, v) in keys {
            let dominated = kept.iter().any(|(q, w)| {
                *w == v
                    && q.xmask == p.xmask
                    && q.sigma == p.sigma
                    && q.f != p.f
                    && (0..bag_len).all(|i| (q.f >> (4 * i) & 0xf) <= (p.f >> (4 * i) & 0xf))
            });
            if dominated {
                self.tables[x].remove(&p);
            } else {
                kept.push((p, v));
            }
        }
    }

    pub fn root_value(&self, nice: &NiceTreeDecomposition) -> usize {
        self.lookup(nice.root(), nice.bag(nice.root()), &KeyBuf::empty()) as usize
    }

    /// Decoded, canonically sorted rows of one node's table.
    pub fn entries(&self, nice: &NiceTreeDecomposition, node: usize) -> Vec<Entry> {
        let bag = nice.bag(node);
        let mut packed: Vec<(Packed, Value)> =
            self.tables[node].iter().map(|(p, &v)| (*p, v)).collect();
        packed.sort_by_key(|(p, _)| (p.xmask, p.sigma, p.f));
        packed
            .into_iter()
            .map(|(p, value)| {
                let len = p.xmask.count_ones() as usize;
                let order: Vec<usize> =
                    (0..len).map(|i| bag[(p.sigma >> (4 * i) & 0xf) as usize]).collect();
                let budgets: Vec<u8> = (0..len).map(|i| (p.f >> (4 * i) & 0xf) as u8).collect();
                let mut chosen = order.clone();
                chosen.sort_unstable();
                Entry { chosen, order, budgets, value }
            })
            .collect()
    }

    pub fn dump(&self, nice: &NiceTreeDecomposition) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        for node in 0..nice.len() {
            let kind = match nice.kind(node) {
                NodeKind::Leaf => "leaf".to_string(),
                NodeKind::Introduce(u) => format!("introduce({u})"),
                NodeKind::Forget(u) => format!("forget({u})"),
                NodeKind::Join => "join".to_string(),
            };
            for e in self.entries(nice, node) {
                writeln!(
                    out,
                    "node {node} kind {kind} key {{{}}}|({})|({}) phi {}",
                    e.chosen.iter().join(","),
                    e.order.iter().join(","),
                    e.budgets.iter().join(","),
                    e.value
                )
                .unwrap();
            }
        }
        out
    }

    /// Witness via the same canonical descent as the demand engine.
    pub fn witness(&self, g: &Graph, nice: &NiceTreeDecomposition) -> Result<VertexSet> {
        let mut out = Vec::new();
        let mut stack = vec![(nice.root(), KeyBuf::empty())];
        while let Some((x, key)) = stack.pop() {
            let bag = nice.bag(x);
            let target = self.lookup(x, bag, &key);
            match nice.kind(x) {
                NodeKind::Leaf => {}
                NodeKind::Introduce(u) => {
                    let child = nice.children(x)[0];
                    let ck = match key.position_of(u) {
                        Some(pos) => key.removed(pos),
                        None => key,
                    };
                    stack.push((child, ck));
                }
                NodeKind::Forget(u) => {
                    let child = nice.children(x)[0];
                    let cbag = nice.bag(child);
                    if self.lookup(child, cbag, &key) == target {
                        stack.push((child, key));
                        continue;
                    }
                    let mut found = false;
                    for pos in 0..=key.len {
                        if let Some(ck) = forget_child_key(g, self.d, u, &key, pos) {
                            if 1 + self.lookup(child, cbag, &ck) == target {
                                out.push(u);
                                stack.push((child, ck));
                                found = true;
                                break;
                            }
                        }
                    }
                    if !found {
                        return Err(Error::Invalid("internal: traceback lost the value".into()));
                    }
                }
                NodeKind::Join => {
                    let kids = nice.children(x);
                    let (l, r) = (kids[0], kids[1]);
                    let mut split = [0u8; MAX_BAG];
                    let mut found = false;
                    'splits: loop {
                        let ky = KeyBuf { order: key.order, budget: split, len: key.len };
                        let mut kz = key;
                        for i in 0..key.len {
                            kz.budget[i] -= split[i];
                        }
                        if self.lookup(l, bag, &ky) + self.lookup(r, bag, &kz) == target {
                            stack.push((l, ky));
                            stack.push((r, kz));
                            found = true;
                            break;
                        }
                        let mut i = 0;
                        loop {
                            if i == key.len {
                                break 'splits;
                            }
                            if split[i] < key.budget[i] {
                                split[i] += 1;
                                break;
                            }
                            split[i] = 0;
                            i += 1;
                        }
                    }
                    if !found {
                        return Err(Error::Invalid("internal: traceback lost the value".into()));
                    }
                }
            }
        }
        if out.len() != self.root_value(nice) {
            return Err(Error::Invalid("internal: witness size differs from root value".into()));
        }
        Ok(VertexSet::new(out))
    }
}

/// Visits every `(X, sigma, f)` key over `bag` in canonical order:
/// subsets by ascending mask, orderings lexicographically, budget
/// vectors in odometer order.
fn for_each_key(bag: &[usize], d: u8, mut visit: impl FnMut(&KeyBuf)) {
    let b = bag.len();
    for mask in 0u32..(1 << b) {
        let members: Vec<usize> = (0..b).filter(|&i| mask >> i & 1 == 1).map(|i| bag[i]).collect();
        let j = members.len();
        for perm in members.iter().copied().permutations(j) {
            let mut key = KeyBuf::empty();
            for (i, &v) in perm.iter().enumerate() {
                key.order[i] = v as u16;
            }
            key.len = j;
            loop {
                visit(&key);
                let mut i = 0;
                loop {
                    if i == j {
                        break;
                    }
                    if key.budget[i] < d {
                        key.budget[i] += 1;
                        break;
                    }
                    key.budget[i] = 0;
                    i += 1;
                }
                if i == j {
                    break;
                }
            }
        }
        if j == 0 {
            // permutations(0) yields one empty permutation already
        }
    }
}

/// Visits every key equal to `cap` except with pointwise smaller-or-equal
/// budgets, in odometer order (the cap itself included).
fn for_each_below(cap: &KeyBuf, mut visit: impl FnMut(&KeyBuf)) {
    let mut key = *cap;
    for i in 0..key.len {
        key.budget[i] = 0;
    }
    loop {
        visit(&key);
        let mut i = 0;
        loop {
            if i == key.len {
                return;
            }
            if key.budget[i] < cap.budget[i] {
                key.budget[i] += 1;
                break;
            }
            key.budget[i] = 0;
            i += 1;
        }
    }
}
