//! Exact canonical forms for small graphs.
//!
//! The canonical form of a graph is the minimum, over all vertex relabelings
//! compatible with an iterated-degree coloring, of the packed upper-triangle
//! edge bitmask. Two graphs on the same vertex count are isomorphic exactly
//! when their canonical forms coincide. The search is a straight
//! branch-and-bound over label positions, so it is exact but only sensible
//! for small `n`; callers above the bound get an error.

use crate::graph::{Graph, GraphError};

/// Exhaustive canonicalization bound: `C(9,2) = 36` mask bits, and the
/// permutation search stays tractable.
pub const MAX_CANON_VERTICES: usize = 9;

impl Graph {
    /// Packs the upper-triangle adjacency bits of the current labeling into a
    /// single integer. Pair `(i, j)` with `i < j` sits at bit
    /// `M - 1 - (j(j-1)/2 + i)` where `M = C(n,2)`, i.e. pair `(0,1)` is the
    /// most significant bit.
    pub fn edge_mask(&self) -> Result<u64, GraphError> {
        let n = self.n();
        if n > MAX_CANON_VERTICES {
            return Err(GraphError::CanonBound { n, max: MAX_CANON_VERTICES });
        }
        let m = n * (n - 1) / 2;
        let mut mask = 0u64;
        for j in 1..n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    let idx = j * (j - 1) / 2 + i;
                    mask |= 1 << (m - 1 - idx);
                }
            }
        }
        Ok(mask)
    }

    /// Inverse of [`Graph::edge_mask`] for the same packing.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_CANON_VERTICES {
            return Err(GraphError::CanonBound { n, max: MAX_CANON_VERTICES });
        }
        let m = n * (n - 1) / 2;
        let mut g = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                let idx = j * (j - 1) / 2 + i;
                if mask >> (m - 1 - idx) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Canonical edge bitmask: invariant under relabeling, distinct across
    /// isomorphism classes.
    pub fn canonical_form(&self) -> Result<u64, GraphError> {
        let n = self.n();
        if n > MAX_CANON_VERTICES {
            return Err(GraphError::CanonBound { n, max: MAX_CANON_VERTICES });
        }
        if n == 1 {
            return Ok(0);
        }
        let colors = refine_colors(self);
        let mut search = CanonSearch {
            graph: self,
            n,
            total_bits: n * (n - 1) / 2,
            position_color: position_colors(&colors, n),
            colors,
            placed: Vec::with_capacity(n),
            used: 0,
            best: None,
        };
        search.descend(0, 0);
        Ok(search.best.expect("canonical search always places all vertices"))
    }

    /// The canonically relabeled representative of this graph's isomorphism
    /// class.
    pub fn canonical_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edge_mask(self.n(), self.canonical_form()?)
    }
}

/// True when `g` and `h` are isomorphic. Graphs of different orders are
/// never isomorphic; equal orders are decided by canonical form.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.n() != h.n() {
        return Ok(false);
    }
    if g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(g.canonical_form()? == h.canonical_form()?)
}

/// Iterated degree refinement (1-dimensional Weisfeiler-Leman).
///
/// Starts from degrees and repeatedly splits color classes by the multiset of
/// neighbor colors. Classes are renumbered by sorting their signatures, which
/// are label-independent, so the final coloring is an isomorphism invariant
/// and the class order itself is canonical.
fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    // initial color: rank of degree, highest degree first
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut uniq = degs.clone();
    uniq.sort_unstable_by(|a, b| b.cmp(a));
    uniq.dedup();
    let mut colors: Vec<u32> =
        degs.drain(..).map(|d| uniq.iter().position(|&u| u == d).unwrap() as u32).collect();
    let mut class_count = uniq.len();

    loop {
        // signature: own color plus sorted neighbor colors
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = vec![colors[v]];
                let mut nbrs = g.neighbors(v);
                while nbrs != 0 {
                    let u = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    sig.push(colors[u]);
                }
                sig[1..].sort_unstable();
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; n];
        let mut color = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                color += 1;
            }
            next[sigs[i].1] = color;
        }
        let next_count = color as usize + 1;
        if next_count == class_count {
            return next;
        }
        class_count = next_count;
        colors = next;
    }
}

/// Color required at each target position: class 0 first, then class 1, ...
fn position_colors(colors: &[u32], n: usize) -> Vec<u32> {
    let mut counts = vec![0usize; colors.iter().map(|&c| c as usize + 1).max().unwrap_or(1)];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let mut out = Vec::with_capacity(n);
    for (c, &k) in counts.iter().enumerate() {
        out.extend(std::iter::repeat_n(c as u32, k));
    }
    out
}

struct CanonSearch<'a> {
    graph: &'a Graph,
    n: usize,
    total_bits: usize,
    position_color: Vec<u32>,
    colors: Vec<u32>,
    placed: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    /// Places position `pos`; `partial` holds the mask bits of all earlier
    /// columns, most significant first.
    fn descend(&mut self, pos: usize, partial: u64) {
        if pos == self.n {
            if self.best.is_none_or(|b| partial < b) {
                self.best = Some(partial);
            }
            return;
        }
        let want = self.position_color[pos];
        // candidate vertices of the right color, cheapest column bits first
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let mut chunk = 0u64;
            for &p in &self.placed {
                chunk = chunk << 1 | (self.graph.neighbors(v) >> p & 1);
            }
            cands.push((chunk, v));
        }
        cands.sort_unstable();
        let placed_bits = pos * (pos + 1) / 2;
        let remaining = self.total_bits - placed_bits;
        for (chunk, v) in cands {
            let next_partial = partial << pos | chunk;
            if let Some(best) = self.best {
                if next_partial > best >> remaining {
                    break; // candidates are sorted; the rest only get worse
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.descend(pos + 1, next_partial);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    #[test]
    fn edge_mask_round_trip() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n);
            let mask = g.edge_mask().unwrap();
            assert_eq!(Graph::from_edge_mask(n, mask).unwrap(), g);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(2..=8);
            let g = random_graph(&mut rng, n);
            let canon = g.canonical_form().unwrap();
            for _ in 0..100 {
                let h = g.permuted(&random_perm(&mut rng, n));
                assert_eq!(h.canonical_form().unwrap(), canon);
            }
        }
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(2..=8);
            let g = random_graph(&mut rng, n);
            let c = g.canonical_graph().unwrap();
            assert_eq!(c.canonical_form().unwrap(), g.canonical_form().unwrap());
            assert_eq!(c.edge_mask().unwrap(), c.canonical_form().unwrap());
        }
    }

    #[test]
    fn path_vs_star_not_isomorphic() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star).unwrap());
    }

    #[test]
    fn sporadic_families_distinct() {
        let a = Family::CompleteMinus2e.build(5).unwrap();
        let b = Family::CompleteMinusC4.build(5).unwrap();
        assert!(!are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn k23_isomorphic_to_relabeling() {
        let g = Family::K23.build(5).unwrap();
        let h = g.permuted(&[3, 1, 4, 0, 2]);
        assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn isomorphism_is_equivalence_on_samples() {
        let mut rng = StdRng::seed_from_u64(11);
        let graphs: Vec<Graph> = (0..12).map(|_| random_graph(&mut rng, 6)).collect();
        for g in &graphs {
            assert!(are_isomorphic(g, g).unwrap());
        }
        for g in &graphs {
            for h in &graphs {
                assert_eq!(are_isomorphic(g, h).unwrap(), are_isomorphic(h, g).unwrap());
            }
        }
        // transitivity spot-check through relabelings
        let g = &graphs[0];
        let h = g.permuted(&random_perm(&mut rng, 6));
        let k = h.permuted(&random_perm(&mut rng, 6));
        assert!(are_isomorphic(g, &h).unwrap());
        assert!(are_isomorphic(&h, &k).unwrap());
        assert!(are_isomorphic(g, &k).unwrap());
    }

    #[test]
    fn canon_bound_enforced() {
        let g = Graph::complete(10).unwrap();
        assert!(matches!(g.canonical_form(), Err(GraphError::CanonBound { .. })));
    }

    #[test]
    fn different_orders_never_isomorphic() {
        let g = Graph::complete(4).unwrap();
        let h = Graph::complete(5).unwrap();
        assert!(!are_isomorphic(&g, &h).unwrap());
    }
}
