//! Isomorph-free enumeration against two independent counts: orbit counting
//! over the symmetric group, and brute-force deduplication of labeled graphs.

use std::collections::HashSet;

use nonham::harness::{canonical_form, enumerate_graphs};
use nonham::Graph;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in (1..=n.min(max)).rev() {
        prefix.push(k);
        partitions(n - k, k, prefix, out);
        prefix.pop();
    }
}

fn poly_mul_binomial(poly: &mut [u128], len: usize, times: usize) {
    for _ in 0..times {
        for m in (len..poly.len()).rev() {
            poly[m] += poly[m - len];
        }
    }
}

/// Number of isomorphism classes of `n`-vertex graphs with `m` edges, for
/// every `m`, by averaging fixed points over cycle types.
fn classes_by_edges(n: usize) -> Vec<u128> {
    let pairs = n * (n - 1) / 2;
    let mut total = vec![0u128; pairs + 1];
    let mut types = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut types);
    let factorial = |k: usize| (1..=k as u128).product::<u128>();
    for parts in types {
        let mut class_size = factorial(n);
        for k in 1..=n {
            let mk = parts.iter().filter(|&&p| p == k).count();
            class_size /= (k as u128).pow(mk as u32) * factorial(mk);
        }
        let mut fixed = vec![0u128; pairs + 1];
        fixed[0] = 1;
        for (i, &a) in parts.iter().enumerate() {
            if a % 2 == 1 {
                poly_mul_binomial(&mut fixed, a, (a - 1) / 2);
            } else {
                poly_mul_binomial(&mut fixed, a, (a - 2) / 2);
                poly_mul_binomial(&mut fixed, a / 2, 1);
            }
            for &b in &parts[i + 1..] {
                let g = gcd(a, b);
                poly_mul_binomial(&mut fixed, a * b / g, g);
            }
        }
        for (t, f) in total.iter_mut().zip(fixed) {
            *t += class_size * f;
        }
    }
    total.into_iter().map(|t| t / factorial(n)).collect()
}

fn histogram(graphs: &[Graph], len: usize) -> Vec<u128> {
    let mut h = vec![0u128; len];
    for g in graphs {
        h[g.edge_count()] += 1;
    }
    h
}

#[test]
fn orbit_counting_reproduces_known_totals() {
    let totals: Vec<u128> = (1..=10).map(|n| classes_by_edges(n).iter().sum()).collect();
    assert_eq!(
        totals,
        vec![1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]
    );
}

#[test]
fn edge_histograms_match_orbit_counts() {
    for n in 1..=8 {
        let expected = classes_by_edges(n);
        let graphs = enumerate_graphs(n, None, None).unwrap();
        assert_eq!(histogram(&graphs, expected.len()), expected, "n = {n}");
    }
}

#[test]
fn sparse_and_dense_windows_at_larger_orders() {
    let expected = classes_by_edges(10);
    let sparse = enumerate_graphs(10, Some(12), None).unwrap();
    let mut want = expected.clone();
    want.iter_mut().skip(13).for_each(|c| *c = 0);
    assert_eq!(histogram(&sparse, want.len()), want);

    let expected = classes_by_edges(9);
    let dense = enumerate_graphs(9, None, Some(30)).unwrap();
    let mut want = expected.clone();
    want.iter_mut().take(30).for_each(|c| *c = 0);
    assert_eq!(histogram(&dense, want.len()), want);
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Smallest edge bitmask over all relabelings.
fn brute_key(n: usize, bits: u32, index: &[Vec<usize>], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| {
            let mut key = 0u32;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> index[u][v] & 1 == 1 {
                        key |= 1 << index[p[u]][p[v]];
                    }
                }
            }
            key
        })
        .min()
        .unwrap()
}

#[test]
fn labeled_deduplication_agrees() {
    for n in 1..=6 {
        let mut index = vec![vec![0usize; n]; n];
        let mut next = 0;
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = next;
                index[v][u] = next;
                next += 1;
            }
        }
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        let mut brute_classes: HashSet<u32> = HashSet::new();
        let mut canonical_classes: HashSet<Graph> = HashSet::new();
        for bits in 0u32..1 << next {
            brute_classes.insert(brute_key(n, bits, &index, &perms));
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> index[u][v] & 1 == 1 {
                        g = g.with_edge(u, v).unwrap();
                    }
                }
            }
            canonical_classes.insert(canonical_form(&g));
        }
        let enumerated = enumerate_graphs(n, None, None).unwrap();
        assert_eq!(brute_classes.len(), enumerated.len(), "n = {n}");
        assert_eq!(canonical_classes.len(), enumerated.len(), "n = {n}");
        assert!(enumerated.iter().all(|g| canonical_classes.contains(g)));
    }
}
