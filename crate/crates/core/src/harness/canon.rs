//! Canonical labeling for small graphs.
//!
//! Individualization-refinement: an equitable ordered partition is refined
//! by neighbor counts, the first smallest non-singleton cell is branched on,
//! and every discrete leaf yields a relabeled graph. The canonical form is
//! the largest leaf graph (rows compared lexicographically). Branches are
//! pruned with automorphisms that fix the current prefix pointwise; twin
//! transpositions seed that group before the search starts.

use crate::graph::Graph;

type Cells = Vec<Vec<usize>>;

/// Canonical form plus the labeling that produces it (`form = g.relabel(&perm)`).
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.order();
    let mut search = Search {
        rows: g.rows(),
        best: None,
        first: None,
        autos: twin_transpositions(g.rows()),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g.rows(), &mut cells);
    search.descend(cells, &mut Vec::new());
    let (rows, perm) = search.best.expect("the search reaches at least one leaf");
    (Graph::from_rows_unchecked(rows), perm)
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

/// Splits every cell by the number of neighbors in each cell until stable.
fn refine(rows: &[u64], cells: &mut Cells) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(rows.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|m| (rows[v] & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            changed |= keyed[0].0 != keyed[keyed.len() - 1].0;
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn twin_transpositions(rows: &[u64]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut seen = 0u64;
    let mut autos = Vec::new();
    for u in 0..n {
        if seen >> u & 1 == 1 {
            continue;
        }
        let mut prev = u;
        for v in u + 1..n {
            let strip = |x: usize, y: usize| rows[x] & !(1u64 << y);
            if seen >> v & 1 == 0 && strip(u, v) == strip(v, u) {
                seen |= 1 << v;
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(prev, v);
                autos.push(perm);
                prev = v;
            }
        }
    }
    autos
}

fn relabeled(rows: &[u64], perm: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; rows.len()];
    for (v, &row) in rows.iter().enumerate() {
        let mut bits = row;
        let mut mapped = 0u64;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            mapped |= 1 << perm[w];
        }
        out[perm[v]] = mapped;
    }
    out
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let mut parent = self.orbits(prefix);
                let root = find(&mut parent, v);
                if explored.iter().any(|&w| find(&mut parent, w) == root) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(self.rows, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Union-find over the orbits of the stored automorphisms fixing `prefix`.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        parent
    }

    fn leaf(&mut self, cells: &Cells) {
        let n = self.rows.len();
        let mut perm = vec![0; n];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let rows = relabeled(self.rows, &perm);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == rows {
                // perm maps onto the same graph as reference.1.
                let mut inverse = vec![0; n];
                for (v, &p) in reference.1.iter().enumerate() {
                    inverse[p] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| inverse[perm[v]]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((rows.clone(), perm.clone()));
        }
        if self.best.as_ref().is_none_or(|b| rows > b.0) {
            self.best = Some((rows, perm));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_h, build_hprime, build_k_minus_clique};
    use crate::graph::tests::{cycle, star};
    use proptest::prelude::*;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        g.relabel(&perm)
    }

    #[test]
    fn labeling_reproduces_form() {
        for g in [
            cycle(7),
            star(5),
            build_h(9, 3).unwrap().graph,
            Graph::empty(10).unwrap(),
        ] {
            let (form, perm) = canonical_labeling(&g);
            assert_eq!(g.relabel(&perm), form);
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(
            &build_h(7, 3).unwrap().graph,
            &build_k_minus_clique(7).unwrap().graph
        ));
        assert!(are_isomorphic(
            &build_h(8, 1).unwrap().graph,
            &build_hprime(8, 1).unwrap().graph
        ));
        assert!(!are_isomorphic(
            &build_h(9, 2).unwrap().graph,
            &build_hprime(9, 2).unwrap().graph
        ));
        // Same degree sequence, different graphs.
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&two_triangles, &cycle(6)));
    }

    #[test]
    fn regular_graphs_with_large_groups() {
        // Petersen graph: vertex-transitive, refinement alone does nothing.
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let form = canonical_form(&petersen);
        for seed in 0..20 {
            assert_eq!(canonical_form(&shuffled(&petersen, seed)), form);
        }
        let cube = Graph::from_edge_list(
            8,
            &[
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (4, 5),
                (5, 7),
                (7, 6),
                (6, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&cube, &cycle(8)));
        assert_eq!(canonical_form(&shuffled(&cube, 3)), canonical_form(&cube));
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(n in 1usize..=10, bits in any::<u64>(), seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> (i % 64) & 1 == 1 {
                        g = g.with_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            let h = shuffled(&g, seed);
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
            prop_assert!(are_isomorphic(&g, &h));
        }
    }
}
