use serde::{Deserialize, Serialize};

use crate::surface::Triangulation;
use crate::{Error, Result};

/// A multicurve in normal position, encoded by per-edge crossing counts.
///
/// Validity in a triangle with side weights `a, b, c` means `a + b + c` is
/// even and each weight is at most the sum of the other two; the corner
/// counts `(b + c - a) / 2` etc. are then the numbers of arcs cutting off
/// each corner.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalMulticurve {
    pub weights: Vec<u64>,
}

impl NormalMulticurve {
    pub fn new(weights: Vec<u64>) -> Self {
        NormalMulticurve { weights }
    }

    pub fn zero(tri: &Triangulation) -> Self {
        NormalMulticurve {
            weights: vec![0; tri.n_edges()],
        }
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    /// Entrywise sum; the disjoint union of multicurves in shared normal
    /// position.
    pub fn sum(&self, other: &NormalMulticurve) -> NormalMulticurve {
        debug_assert_eq!(self.weights.len(), other.weights.len());
        NormalMulticurve {
            weights: self
                .weights
                .iter()
                .zip(&other.weights)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Corner counts of a triangle: `corners[k]` is the number of arcs cutting
/// off corner `k` (joining sides `k-1` and `k`).
pub(crate) fn corner_counts(tri: &Triangulation, w: &[u64], t: u32) -> Option<[u64; 3]> {
    let e = tri.tri_edges(t);
    let ws = [w[e[0] as usize], w[e[1] as usize], w[e[2] as usize]];
    if (ws[0] + ws[1] + ws[2]) % 2 != 0 {
        return None;
    }
    let mut x = [0u64; 3];
    for k in 0..3 {
        let sum = ws[k] + ws[(k + 2) % 3];
        let other = ws[(k + 1) % 3];
        if sum < other {
            return None;
        }
        x[k] = (sum - other) / 2;
    }
    Some(x)
}

/// Checks the normal-coordinate matching conditions in every triangle.
pub fn validate_normal(tri: &Triangulation, w: &[u64]) -> Result<bool> {
    tri.check_weights_len(w)?;
    for t in 0..tri.n_triangles() as u32 {
        if corner_counts(tri, w, t).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One traced component as an explicit closed walk.
///
/// `steps[i] = (h, idx)`: the walk sits at point `idx` of edge
/// `edge_of(h)` and departs through side `h` into `tri(h)`, along the normal
/// arc determined by the coordinates. Point indices are along the canonical
/// side of the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveEmbedding {
    pub steps: Vec<(u32, u32)>,
}

impl CurveEmbedding {
    pub fn weights(&self, tri: &Triangulation) -> NormalMulticurve {
        let mut w = vec![0u64; tri.n_edges()];
        for &(h, _) in &self.steps {
            w[tri.edge_of(h) as usize] += 1;
        }
        NormalMulticurve::new(w)
    }
}

#[inline]
pub(crate) fn rank_along(tri: &Triangulation, h: u32, idx: u64, w: u64) -> u64 {
    if tri.canonical_side(tri.edge_of(h)) == h {
        idx
    } else {
        w - 1 - idx
    }
}

#[inline]
pub(crate) fn idx_from_rank(tri: &Triangulation, h: u32, rank: u64, w: u64) -> u64 {
    rank_along(tri, h, rank, w) // same involution
}

/// The normal arc leaving point `rank` of side `h` (ranks along `h` itself),
/// returning the side and rank where it lands in the same triangle.
pub(crate) fn arc_partner(
    tri: &Triangulation,
    w: &[u64],
    corners: &[[u64; 3]],
    h: u32,
    rank: u64,
) -> (u32, u64) {
    let t = tri.tri_of(h);
    let k = tri.side_in_tri(h) as usize;
    let x = corners[t as usize];
    let wk = w[tri.edge_of(h) as usize];
    if rank < x[k] {
        // arc cutting corner k, to side k-1
        let h2 = tri.prev(h);
        let w2 = w[tri.edge_of(h2) as usize];
        (h2, w2 - 1 - rank)
    } else {
        // arc cutting corner k+1, to side k+1
        let depth = wk - 1 - rank;
        debug_assert!(depth < x[(k + 1) % 3]);
        let h2 = tri.next(h);
        (h2, depth)
    }
}

/// Splits a valid multicurve into connected components.
///
/// The outputs partition the weights: their entrywise sum is the input.
pub fn trace_components(tri: &Triangulation, w: &[u64]) -> Result<Vec<NormalMulticurve>> {
    Ok(trace_embeddings(tri, w)?
        .into_iter()
        .map(|emb| emb.weights(tri))
        .collect())
}

/// Like [`trace_components`] but keeps the explicit walks.
pub fn trace_embeddings(tri: &Triangulation, w: &[u64]) -> Result<Vec<CurveEmbedding>> {
    if !validate_normal(tri, w)? {
        return Err(Error::NotNormal);
    }
    let corners: Vec<[u64; 3]> = (0..tri.n_triangles() as u32)
        .map(|t| corner_counts(tri, w, t).unwrap())
        .collect();

    // visited per (edge, idx)
    let offsets: Vec<usize> = {
        let mut acc = 0usize;
        let mut v = Vec::with_capacity(tri.n_edges());
        for e in 0..tri.n_edges() {
            v.push(acc);
            acc += w[e] as usize;
        }
        v
    };
    let total: usize = w.iter().map(|&x| x as usize).sum();
    let mut visited = vec![false; total];
    let point_id =
        |e: u32, idx: u64| -> usize { offsets[e as usize] + idx as usize };

    let mut components = Vec::new();
    for e in 0..tri.n_edges() as u32 {
        for idx in 0..w[e as usize] {
            if visited[point_id(e, idx)] {
                continue;
            }
            let start = (tri.canonical_side(e), idx as u32);
            let mut steps = Vec::new();
            let mut cur = start;
            loop {
                let (h, idx) = cur;
                visited[point_id(tri.edge_of(h), idx as u64)] = true;
                steps.push(cur);
                // follow the arc in tri(h), then cross the landing edge
                let we = w[tri.edge_of(h) as usize];
                let r = rank_along(tri, h, idx as u64, we);
                let (h2, r2) = arc_partner(tri, w, &corners, h, r);
                let w2 = w[tri.edge_of(h2) as usize];
                let idx2 = idx_from_rank(tri, h2, r2, w2);
                cur = (tri.opp(h2), idx2 as u32);
                if cur == start {
                    break;
                }
            }
            components.push(CurveEmbedding { steps });
        }
    }
    // deterministic ordering: by weight vector
    let mut with_w: Vec<(NormalMulticurve, CurveEmbedding)> = components
        .into_iter()
        .map(|emb| (emb.weights(tri), emb))
        .collect();
    with_w.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(with_w.into_iter().map(|(_, emb)| emb).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_standard_triangulation;

    #[test]
    fn zero_vector_is_valid_and_empty() {
        let t = build_standard_triangulation(2).unwrap();
        let w = vec![0u64; t.n_edges()];
        assert!(validate_normal(&t, &w).unwrap());
        assert!(trace_components(&t, &w).unwrap().is_empty());
    }

    #[test]
    fn all_two_is_the_vertex_link() {
        // The link of the unique vertex crosses every edge twice and is a
        // single circle.
        let t = build_standard_triangulation(2).unwrap();
        let w = vec![2u64; t.n_edges()];
        assert!(validate_normal(&t, &w).unwrap());
        let comps = trace_components(&t, &w).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].weights, w);
    }

    #[test]
    fn odd_triangle_sum_is_invalid() {
        let t = build_standard_triangulation(2).unwrap();
        let mut w = vec![0u64; t.n_edges()];
        w[0] = 1;
        assert!(!validate_normal(&t, &w).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let t = build_standard_triangulation(2).unwrap();
        assert!(matches!(
            validate_normal(&t, &[0, 0]),
            Err(Error::WeightLength { .. })
        ));
    }

    #[test]
    fn components_partition_weights() {
        let t = build_standard_triangulation(2).unwrap();
        let w = vec![2u64; t.n_edges()];
        let comps = trace_components(&t, &w).unwrap();
        let mut sum = vec![0u64; t.n_edges()];
        for c in &comps {
            for (i, x) in c.weights.iter().enumerate() {
                sum[i] += x;
            }
        }
        assert_eq!(sum, w);
    }
}
