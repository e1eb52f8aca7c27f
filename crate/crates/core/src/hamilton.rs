//! Exact hamiltonicity: cycles, cycles through a prescribed linear forest,
//! and hamiltonian paths between two given vertices.
//!
//! All three questions are answered by one engine. The vertex set is split
//! into *units*: each path of the forest is a unit that must be traversed
//! whole, every other vertex is a unit of its own. A route then visits units
//! one after another, entering each at one end and leaving at the other.
//!
//! Up to [`DEFAULT_DP_LIMIT`] units the engine runs a Held–Karp style
//! reachability table over subsets of units: `reach[mask]` is the set of
//! vertices at which a route from the start unit through exactly `mask` can
//! end. Beyond that it falls back to depth-first search with reachability
//! pruning. Graphs meeting Ore's degree-sum condition skip the search and
//! get a cycle built directly.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest unit count handled by the subset table.
pub const DEFAULT_DP_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonError {
    #[error("search cancelled")]
    Cancelled,
    #[error("forest edge ({0}, {1}) is not an edge of the graph")]
    ForestEdgeMissing(usize, usize),
    #[error("not a linear forest: {0}")]
    MalformedForest(String),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("path endpoints must differ (both are {0})")]
    SameEndpoints(usize),
}

/// Cooperative cancellation flag shared between a driver and its searches.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// A disjoint union of paths, given by its edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForest {
    edges: Vec<(usize, usize)>,
}

impl LinearForest {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that `edges` has maximum degree 2 and no cycle.
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self, HamiltonError> {
        let mut adj = [0u64; MAX_VERTICES];
        // Union-find over endpoints detects cycles, including doubled edges.
        let mut parent: Vec<usize> = (0..MAX_VERTICES).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= MAX_VERTICES {
                    return Err(HamiltonError::VertexOutOfRange {
                        vertex: x,
                        n: MAX_VERTICES,
                    });
                }
            }
            if u == v {
                return Err(HamiltonError::MalformedForest(format!("loop at {u}")));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(HamiltonError::MalformedForest(format!(
                    "edge ({u}, {v}) closes a cycle"
                )));
            }
            parent[ru] = rv;
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            for x in [u, v] {
                if adj[x].count_ones() > 2 {
                    return Err(HamiltonError::MalformedForest(format!(
                        "vertex {x} has forest degree 3"
                    )));
                }
            }
        }
        Ok(LinearForest { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges, ℓ.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A hamiltonian cycle as a cyclic vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub order: Vec<usize>,
}

impl CycleWitness {
    /// Is this a permutation of `g`'s vertices whose cyclically consecutive
    /// pairs are all edges of `g`?
    pub fn validates(&self, g: &Graph) -> bool {
        let n = g.order();
        n >= 3
            && self.order.len() == n
            && self.order.iter().copied().collect::<VertexSet>() == g.vertices()
            && (0..n).all(|i| g.has_edge(self.order[i], self.order[(i + 1) % n]))
    }

    pub fn uses_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order.len();
        (0..n).any(|i| {
            let (a, b) = (self.order[i], self.order[(i + 1) % n]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| (self.order[i], self.order[(i + 1) % n]))
    }
}

/// A hamiltonian path as a vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub order: Vec<usize>,
}

impl PathWitness {
    pub fn validates(&self, g: &Graph, s: usize, t: usize) -> bool {
        self.order.len() == g.order()
            && self.order.first() == Some(&s)
            && self.order.last() == Some(&t)
            && self.order.iter().copied().collect::<VertexSet>() == g.vertices()
            && self.order.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Which sufficient condition certified hamiltonicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastVerdict {
    /// δ(G) ≥ n/2.
    Dirac,
    /// d(u) + d(v) ≥ n for every non-edge uv.
    Ore,
}

/// Dirac's or Ore's sufficient condition; never reports nonhamiltonicity.
pub fn dirac_ore_fast_check(g: &Graph) -> Option<FastVerdict> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    if 2 * g.min_degree() >= n {
        return Some(FastVerdict::Dirac);
    }
    g.non_edges()
        .all(|(u, v)| g.degree(u) + g.degree(v) >= n)
        .then_some(FastVerdict::Ore)
}

/// Builds a hamiltonian cycle in a graph satisfying Ore's condition.
///
/// Grows a path greedily; when stuck, the degree-sum condition guarantees a
/// crossing pair of edges that closes the path into a cycle, which is then
/// reopened next to an outside neighbor.
fn ore_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut path = vec![0usize];
    let mut on_path = VertexSet::singleton(0);
    loop {
        let last = *path.last().expect("nonempty");
        if let Some(w) = (g.neighbors(last) - on_path).first() {
            path.push(w);
            on_path = on_path.with(w);
            continue;
        }
        let first = path[0];
        if let Some(w) = (g.neighbors(first) - on_path).first() {
            path.insert(0, w);
            on_path = on_path.with(w);
            continue;
        }
        // Both ends have all neighbors on the path: close it into a cycle.
        let m = path.len();
        if !g.has_edge(first, last) {
            let i = (0..m - 1)
                .find(|&i| g.has_edge(first, path[i + 1]) && g.has_edge(last, path[i]))
                .expect("Ore condition yields a crossing pair");
            path[i + 1..].reverse();
        }
        if m == n {
            return path;
        }
        // Reopen the cycle right after a vertex with an outside neighbor.
        let i = (0..m)
            .find(|&i| !(g.neighbors(path[i]) - on_path).is_empty())
            .expect("Ore condition implies connectivity");
        path.rotate_left(i + 1);
    }
}

#[derive(Debug, Clone)]
struct Unit {
    /// Vertices in traversal order from one end to the other.
    path: Vec<usize>,
}

impl Unit {
    fn start(&self) -> usize {
        self.path[0]
    }

    fn end(&self) -> usize {
        *self.path.last().expect("nonempty unit")
    }

    /// `(enter, exit)` pairs.
    fn orientations(&self) -> impl Iterator<Item = (usize, usize)> {
        let (a, b) = (self.start(), self.end());
        let both = a != b;
        std::iter::once((a, b)).chain(both.then_some((b, a)))
    }
}

#[derive(Debug, Clone, Copy)]
enum Goal {
    Cycle,
    PathTo(usize),
}

/// Configurable solver; the free functions use [`Solver::default`].
#[derive(Debug, Clone)]
pub struct Solver {
    dp_limit: usize,
    cancel: Option<CancelToken>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            dp_limit: DEFAULT_DP_LIMIT,
            cancel: None,
        }
    }
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Unit count above which depth-first search replaces the subset table.
    pub fn with_dp_limit(mut self, units: usize) -> Self {
        self.dp_limit = units;
        self
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    fn cancelled(&self) -> bool {
        self.cancel.as_ref().is_some_and(CancelToken::is_cancelled)
    }

    pub fn cycle(&self, g: &Graph) -> Result<Option<CycleWitness>, HamiltonError> {
        let n = g.order();
        if n < 3 || g.min_degree() < 2 || !g.is_two_connected() {
            return Ok(None);
        }
        if dirac_ore_fast_check(g).is_some() {
            return Ok(Some(CycleWitness {
                order: ore_cycle(g),
            }));
        }
        let units = (0..n).map(|v| Unit { path: vec![v] }).collect();
        let order = self.route(g, units, 0, Goal::Cycle)?;
        Ok(order.map(|order| CycleWitness { order }))
    }

    pub fn cycle_through(
        &self,
        g: &Graph,
        forest: &LinearForest,
    ) -> Result<Option<CycleWitness>, HamiltonError> {
        let n = g.order();
        for &(u, v) in forest.edges() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(HamiltonError::VertexOutOfRange { vertex, n });
                }
            }
            if !g.has_edge(u, v) {
                return Err(HamiltonError::ForestEdgeMissing(u, v));
            }
        }
        if forest.is_empty() {
            return self.cycle(g);
        }
        if n < 3 {
            return Ok(None);
        }
        let units = forest_units(n, forest);
        let start = units
            .iter()
            .position(|u| u.path.contains(&0))
            .expect("every vertex lies in a unit");
        let order = self.route(g, units, start, Goal::Cycle)?;
        Ok(order.map(|order| CycleWitness { order }))
    }

    pub fn path_between(
        &self,
        g: &Graph,
        s: usize,
        t: usize,
    ) -> Result<Option<PathWitness>, HamiltonError> {
        let n = g.order();
        for vertex in [s, t] {
            if vertex >= n {
                return Err(HamiltonError::VertexOutOfRange { vertex, n });
            }
        }
        if s == t {
            return Err(HamiltonError::SameEndpoints(s));
        }
        // Every inner vertex needs two path neighbors, the ends one.
        let blocked = (0..n).any(|v| {
            let need = if v == s || v == t { 1 } else { 2 };
            g.degree(v) < need
        });
        if blocked || !g.is_connected() {
            return Ok(None);
        }
        let units = (0..n).map(|v| Unit { path: vec![v] }).collect();
        let order = self.route(g, units, s, Goal::PathTo(t))?;
        Ok(order.map(|order| PathWitness { order }))
    }

    /// Finds a route starting with `units[start]` traversed start→end and
    /// visiting every unit once, then expands it to a vertex order.
    fn route(
        &self,
        g: &Graph,
        mut units: Vec<Unit>,
        start: usize,
        goal: Goal,
    ) -> Result<Option<Vec<usize>>, HamiltonError> {
        let first = units.swap_remove(start);
        if let Goal::PathTo(t) = goal {
            // The target must be the last unit entered; keep it in the pool.
            debug_assert!(units.iter().any(|u| u.path == [t]));
        }
        if units.is_empty() {
            let closes = match goal {
                Goal::Cycle => g.order() >= 3 && g.has_edge(first.end(), first.start()),
                Goal::PathTo(t) => first.end() == t,
            };
            return Ok(closes.then(|| first.path.clone()));
        }
        let steps = if units.len() < self.dp_limit {
            self.route_dp(g, &first, &units, goal)?
        } else {
            self.route_dfs(g, &first, &units, goal)?
        };
        Ok(steps.map(|steps| {
            let mut order = first.path.clone();
            for (unit, enter) in steps {
                let u = &units[unit];
                if enter == u.start() {
                    order.extend_from_slice(&u.path);
                } else {
                    order.extend(u.path.iter().rev());
                }
            }
            order
        }))
    }

    /// Subset table over the non-start units. Returns `(unit, entry vertex)`
    /// steps in route order.
    fn route_dp(
        &self,
        g: &Graph,
        first: &Unit,
        units: &[Unit],
        goal: Goal,
    ) -> Result<Option<Vec<(usize, usize)>>, HamiltonError> {
        let m = units.len();
        let orient: Vec<Vec<(usize, usize)>> =
            units.iter().map(|u| u.orientations().collect()).collect();
        let full = (1usize << m) - 1;
        let mut reach = vec![0u64; 1 << m];
        reach[0] = 1 << first.end();
        for mask in 1..=full {
            if mask & 0xfff == 0 && self.cancelled() {
                return Err(HamiltonError::Cancelled);
            }
            let mut exits = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let prev = reach[mask ^ (1 << i)];
                if prev == 0 {
                    continue;
                }
                for &(enter, exit) in &orient[i] {
                    if prev & g.rows()[enter] != 0 {
                        exits |= 1 << exit;
                    }
                }
            }
            reach[mask] = exits;
        }

        let last_exit = match goal {
            Goal::Cycle => VertexSet::from_bits(reach[full]) & g.neighbors(first.start()),
            Goal::PathTo(t) => VertexSet::from_bits(reach[full]) & VertexSet::singleton(t),
        };
        let Some(mut exit) = last_exit.first() else {
            return Ok(None);
        };

        // Walk the table backwards.
        let mut steps = Vec::with_capacity(m);
        let mut mask = full;
        while mask != 0 {
            let (unit, enter, prev_exit) = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .find_map(|i| {
                    let prev = reach[mask ^ (1 << i)];
                    orient[i].iter().find_map(|&(enter, x)| {
                        let link = prev & g.rows()[enter];
                        (x == exit && link != 0).then(|| (i, enter, link.trailing_zeros() as usize))
                    })
                })
                .expect("reachability table is consistent");
            steps.push((unit, enter));
            mask ^= 1 << unit;
            exit = prev_exit;
        }
        steps.reverse();
        Ok(Some(steps))
    }

    fn route_dfs(
        &self,
        g: &Graph,
        first: &Unit,
        units: &[Unit],
        goal: Goal,
    ) -> Result<Option<Vec<(usize, usize)>>, HamiltonError> {
        let mut search = Dfs {
            g,
            units,
            home: first.start(),
            goal,
            steps: Vec::with_capacity(units.len()),
            used: vec![false; units.len()],
            ends: units
                .iter()
                .fold(VertexSet::empty(), |s, u| s.with(u.start()).with(u.end())),
            solver: self,
            nodes: 0,
        };
        Ok(search.extend(first.end())?.then_some(search.steps))
    }
}

fn forest_units(n: usize, forest: &LinearForest) -> Vec<Unit> {
    let mut adj = vec![0u64; n];
    for &(u, v) in forest.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut seen = VertexSet::empty();
    let mut units = Vec::new();
    for v in 0..n {
        if seen.contains(v) || adj[v].count_ones() == 2 {
            continue;
        }
        // `v` is isolated in the forest or a path end: walk the path.
        let mut path = vec![v];
        seen = seen.with(v);
        let mut cur = v;
        while let Some(next) = (VertexSet::from_bits(adj[cur]) - seen).first() {
            path.push(next);
            seen = seen.with(next);
            cur = next;
        }
        units.push(Unit { path });
    }
    debug_assert_eq!(
        seen,
        VertexSet::full(n),
        "linear forest components are paths"
    );
    units
}

struct Dfs<'a> {
    g: &'a Graph,
    units: &'a [Unit],
    home: usize,
    goal: Goal,
    steps: Vec<(usize, usize)>,
    used: Vec<bool>,
    /// Ends of units not yet visited.
    ends: VertexSet,
    solver: &'a Solver,
    nodes: u64,
}

impl Dfs<'_> {
    fn extend(&mut self, exit: usize) -> Result<bool, HamiltonError> {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 && self.solver.cancelled() {
            return Err(HamiltonError::Cancelled);
        }
        if self.steps.len() == self.units.len() {
            return Ok(match self.goal {
                Goal::Cycle => self.g.has_edge(exit, self.home),
                Goal::PathTo(t) => exit == t,
            });
        }
        if !self.feasible(exit) {
            return Ok(false);
        }
        let mut moves: Vec<(usize, usize, usize, usize)> = Vec::new();
        for (i, unit) in self.units.iter().enumerate() {
            if self.used[i] {
                continue;
            }
            for (enter, out) in unit.orientations() {
                if !self.g.has_edge(exit, enter) {
                    continue;
                }
                if let Goal::PathTo(t) = self.goal {
                    if out == t && self.steps.len() + 1 < self.units.len() {
                        continue;
                    }
                }
                // Fewest onward options first.
                let options = (self.g.neighbors(out) & self.ends).len();
                moves.push((options, i, enter, out));
            }
        }
        moves.sort_unstable();
        for (_, i, enter, out) in moves {
            let unit = &self.units[i];
            self.used[i] = true;
            self.ends = self.ends.without(unit.start()).without(unit.end());
            self.steps.push((i, enter));
            if self.extend(out)? {
                return Ok(true);
            }
            self.steps.pop();
            self.ends = self.ends.with(unit.start()).with(unit.end());
            self.used[i] = false;
        }
        Ok(false)
    }

    /// Every unvisited unit must still be enterable and leavable.
    fn feasible(&self, exit: usize) -> bool {
        let mut contacts = self.ends.with(exit);
        if let Goal::Cycle = self.goal {
            contacts = contacts.with(self.home);
        }
        self.units.iter().enumerate().all(|(i, unit)| {
            if self.used[i] {
                return true;
            }
            let (a, b) = (unit.start(), unit.end());
            let own = VertexSet::singleton(a).with(b);
            let na = (self.g.neighbors(a) & contacts) - own;
            let nb = (self.g.neighbors(b) & contacts) - own;
            let is_target = matches!(self.goal, Goal::PathTo(t) if t == a);
            if a == b {
                na.len() >= if is_target { 1 } else { 2 }
            } else {
                !na.is_empty() && !nb.is_empty() && (na | nb).len() >= 2
            }
        })
    }
}

/// A hamiltonian cycle of `g`, if one exists. Graphs on fewer than three
/// vertices have none.
pub fn is_hamiltonian(g: &Graph) -> Option<CycleWitness> {
    Solver::default().cycle(g).expect("no cancellation token")
}

/// A hamiltonian cycle of `g` using every edge of `forest`.
pub fn ham_cycle_through_forest(
    g: &Graph,
    forest: &LinearForest,
) -> Result<Option<CycleWitness>, HamiltonError> {
    Solver::default().cycle_through(g, forest)
}

/// A hamiltonian path from `s` to `t`.
pub fn ham_path_between(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<Option<PathWitness>, HamiltonError> {
    Solver::default().path_between(g, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_h;
    use crate::graph::tests::{cycle, star};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &edges).unwrap()
    }

    /// Every hamiltonian cycle through vertex 0, by permutations of the rest.
    fn brute_cycles(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut out = Vec::new();
        if n < 3 {
            return out;
        }
        let mut rest: Vec<usize> = (1..n).collect();
        permute(&mut rest, 0, &mut |p| {
            let mut order = vec![0];
            order.extend_from_slice(p);
            if (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) {
                out.push(order);
            }
        });
        out
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn cycle_examples() {
        let c5 = cycle(5);
        let w = is_hamiltonian(&c5).unwrap();
        assert!(w.validates(&c5));
        assert!(is_hamiltonian(&build_h(11, 3).unwrap().graph).is_none());
        let p = petersen();
        assert!(brute_cycles(&p).is_empty());
        assert!(is_hamiltonian(&p).is_none());
        assert!(Solver::new().with_dp_limit(0).cycle(&p).unwrap().is_none());
    }

    #[test]
    fn degenerate_orders() {
        assert!(is_hamiltonian(&Graph::empty(1).unwrap()).is_none());
        assert!(is_hamiltonian(&Graph::complete(2).unwrap()).is_none());
        assert!(is_hamiltonian(&Graph::complete(3).unwrap()).is_some());
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_hamiltonian(&p3).is_none());
    }

    #[test]
    fn forest_examples() {
        let k5 = Graph::complete(5).unwrap();
        let f = LinearForest::new(vec![(0, 1), (1, 2)]).unwrap();
        let w = ham_cycle_through_forest(&k5, &f).unwrap().unwrap();
        assert!(w.validates(&k5) && w.uses_edge(0, 1) && w.uses_edge(1, 2));

        let c5 = cycle(5);
        let f = LinearForest::new(vec![(0, 1), (2, 3)]).unwrap();
        let w = ham_cycle_through_forest(&c5, &f).unwrap().unwrap();
        assert!(w.validates(&c5));
        assert!(c5.edges().all(|(u, v)| w.uses_edge(u, v)));

        let chord = c5.with_edge(0, 2).unwrap();
        let f = LinearForest::new(vec![(0, 2), (3, 4)]).unwrap();
        assert!(brute_cycles(&chord)
            .iter()
            .all(|c| !CycleWitness { order: c.clone() }.uses_edge(0, 2)));
        assert_eq!(ham_cycle_through_forest(&chord, &f).unwrap(), None);
        let dfs = Solver::new().with_dp_limit(0);
        assert_eq!(dfs.cycle_through(&chord, &f).unwrap(), None);
    }

    #[test]
    fn forest_errors() {
        assert!(matches!(
            LinearForest::new(vec![(0, 1), (1, 2), (2, 0)]),
            Err(HamiltonError::MalformedForest(_))
        ));
        assert!(matches!(
            LinearForest::new(vec![(0, 1), (0, 2), (0, 3)]),
            Err(HamiltonError::MalformedForest(_))
        ));
        assert!(matches!(
            LinearForest::new(vec![(0, 1), (1, 0)]),
            Err(HamiltonError::MalformedForest(_))
        ));
        let f = LinearForest::new(vec![(0, 2)]).unwrap();
        assert_eq!(
            ham_cycle_through_forest(&cycle(5), &f),
            Err(HamiltonError::ForestEdgeMissing(0, 2))
        );
        let f = LinearForest::new(vec![(0, 7)]).unwrap();
        assert!(matches!(
            ham_cycle_through_forest(&cycle(5), &f),
            Err(HamiltonError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn forest_covering_everything() {
        let k4 = Graph::complete(4).unwrap();
        let f = LinearForest::new(vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = ham_cycle_through_forest(&k4, &f).unwrap().unwrap();
        assert!(w.validates(&k4));
        let p4 = k4.without_edge(0, 3).unwrap();
        assert_eq!(ham_cycle_through_forest(&p4, &f).unwrap(), None);
    }

    #[test]
    fn path_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(ham_path_between(&k4, 0, 1)
            .unwrap()
            .unwrap()
            .validates(&k4, 0, 1));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            ham_path_between(&p3, 0, 2).unwrap().unwrap().order,
            vec![0, 1, 2]
        );
        assert_eq!(ham_path_between(&star(3), 1, 2).unwrap(), None);
        assert_eq!(
            ham_path_between(&k4, 2, 2),
            Err(HamiltonError::SameEndpoints(2))
        );
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            ham_path_between(&k2, 1, 0).unwrap().unwrap().order,
            vec![1, 0]
        );
        let dfs = Solver::new().with_dp_limit(0);
        assert_eq!(
            dfs.path_between(&p3, 0, 2).unwrap().unwrap().order,
            vec![0, 1, 2]
        );
        assert_eq!(dfs.path_between(&p3, 0, 1).unwrap(), None);
    }

    #[test]
    fn fast_check_examples() {
        assert_eq!(
            dirac_ore_fast_check(&Graph::complete(6).unwrap()),
            Some(FastVerdict::Dirac)
        );
        assert_eq!(dirac_ore_fast_check(&cycle(6)), None);
        assert!(is_hamiltonian(&cycle(6)).is_some());
        assert_eq!(dirac_ore_fast_check(&build_h(10, 2).unwrap().graph), None);
    }

    #[test]
    fn ore_construction_on_ore_graphs() {
        // K_{k,k+1}-free dense graphs: complete graph minus a matching.
        for n in 3..=30 {
            let mut g = Graph::complete(n).unwrap();
            for i in (0..n - 1).step_by(2) {
                g = g.without_edge(i, i + 1).unwrap();
            }
            if dirac_ore_fast_check(&g).is_some() {
                let w = CycleWitness {
                    order: ore_cycle(&g),
                };
                assert!(w.validates(&g), "n = {n}");
            }
        }
    }

    #[test]
    fn cancellation_is_observed() {
        let token = CancelToken::new();
        token.cancel();
        let g = build_h(20, 3).unwrap().graph;
        let solver = Solver::new().with_cancel(token);
        assert_eq!(solver.cycle(&g), Err(HamiltonError::Cancelled));
    }

    #[test]
    fn dfs_matches_dp_on_constructions() {
        let dfs = Solver::new().with_dp_limit(0);
        for n in 5..=12 {
            for d in 1..=(n - 1) / 2 {
                let g = build_h(n, d).unwrap().graph;
                assert!(dfs.cycle(&g).unwrap().is_none());
                let plus = g.with_edge(n - 1, n - 2).unwrap();
                assert_eq!(
                    dfs.cycle(&plus).unwrap().is_some(),
                    is_hamiltonian(&plus).is_some(),
                    "n = {n}, d = {d}"
                );
            }
        }
    }
}
