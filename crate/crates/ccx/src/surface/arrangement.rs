//! Cutting a surface along a disjoint family of normal curves.
//!
//! The family is realized simultaneously by summing weight vectors; the
//! summed multicurve decomposes each triangle into cells bounded by nested
//! arcs. Gluing cells across edge sub-segments (and across curves that are
//! *not* cut along) and counting cells, segments, arc sides, and vertex
//! copies yields the exact census of the cut pieces.

use serde::{Deserialize, Serialize};

use crate::surface::curves::CurveClass;
use crate::surface::normal::{corner_counts, trace_embeddings, NormalMulticurve};
use crate::surface::Triangulation;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub euler: i64,
    pub boundary_circles: usize,
    pub genus: usize,
}

/// Census of the pieces obtained by cutting along a disjoint curve family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutPieces {
    pub pieces: Vec<Piece>,
}

impl CutPieces {
    pub fn count(&self) -> usize {
        self.pieces.len()
    }

    pub fn total_euler(&self) -> i64 {
        self.pieces.iter().map(|p| p.euler).sum()
    }

    pub fn total_boundary(&self) -> usize {
        self.pieces.iter().map(|p| p.boundary_circles).sum()
    }

    pub fn has_disk(&self) -> bool {
        self.pieces.iter().any(|p| p.euler == 1)
    }
}

/// Census plus locations: which piece each side of each cut curve borders,
/// and which piece each kept (not cut) curve lies in.
#[derive(Debug, Clone)]
pub struct MembershipCensus {
    pub pieces: CutPieces,
    /// per cut curve: (piece on one side, piece on the other side)
    pub cut_sides: Vec<(usize, usize)>,
    /// per kept curve: the piece containing it
    pub keep_piece: Vec<usize>,
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb as usize] = ra;
        }
    }
}

/// The per-triangle cell layout of a (crossing-free) normal multicurve.
pub(crate) struct CellLayout<'a> {
    pub tri: &'a Triangulation,
    pub w: Vec<u64>,
    pub corners: Vec<[u64; 3]>,
    cell_base: Vec<usize>,
    pub n_cells: usize,
}

impl<'a> CellLayout<'a> {
    pub fn new(tri: &'a Triangulation, w: Vec<u64>) -> Result<Self> {
        let mut corners = Vec::with_capacity(tri.n_triangles());
        for t in 0..tri.n_triangles() as u32 {
            corners.push(corner_counts(tri, &w, t).ok_or(Error::NotNormal)?);
        }
        let mut cell_base = Vec::with_capacity(tri.n_triangles());
        let mut acc = 0usize;
        for x in &corners {
            cell_base.push(acc);
            acc += (x[0] + x[1] + x[2]) as usize + 1;
        }
        Ok(CellLayout {
            tri,
            w,
            corners,
            cell_base,
            n_cells: acc,
        })
    }

    pub fn central(&self, t: u32) -> u32 {
        let x = self.corners[t as usize];
        (self.cell_base[t as usize] + (x[0] + x[1] + x[2]) as usize) as u32
    }

    /// Cell `(t, corner k, depth j)`: between arcs of depth `j-1` and `j`
    /// (depth 0 is the tip at the corner).
    pub fn corner_cell(&self, t: u32, k: usize, j: u64) -> u32 {
        let x = self.corners[t as usize];
        debug_assert!(j < x[k]);
        let mut off = 0u64;
        for kk in 0..k {
            off += x[kk];
        }
        (self.cell_base[t as usize] as u64 + off + j) as u32
    }

    /// Cell adjacent to sub-segment `i` (0..=w) of side `h`, indexed along
    /// `h` itself.
    pub fn cell_of_segment(&self, h: u32, i: u64) -> u32 {
        let t = self.tri.tri_of(h);
        let k = self.tri.side_in_tri(h) as usize;
        let x = self.corners[t as usize];
        let wk = self.w[self.tri.edge_of(h) as usize];
        if i < x[k] {
            self.corner_cell(t, k, i)
        } else if wk - i < x[(k + 1) % 3] {
            self.corner_cell(t, (k + 1) % 3, wk - i)
        } else {
            self.central(t)
        }
    }

    /// The arc of corner `k`, depth `j` in triangle `t`; its two sides.
    pub fn chord_sides(&self, t: u32, k: usize, j: u64) -> (u32, u32) {
        let x = self.corners[t as usize];
        let inner = self.corner_cell(t, k, j);
        let outer = if j + 1 < x[k] {
            self.corner_cell(t, k, j + 1)
        } else {
            self.central(t)
        };
        (inner, outer)
    }

    /// Chord through the point at `rank` of side `h`: `(t, corner, depth)`.
    pub fn chord_at(&self, h: u32, rank: u64) -> (u32, usize, u64) {
        let t = self.tri.tri_of(h);
        let k = self.tri.side_in_tri(h) as usize;
        let x = self.corners[t as usize];
        let wk = self.w[self.tri.edge_of(h) as usize];
        if rank < x[k] {
            (t, k, rank)
        } else {
            (t, (k + 1) % 3, wk - 1 - rank)
        }
    }

    /// Tip cell at corner `k` of triangle `t` (contains the triangulation
    /// vertex sitting at that corner).
    pub fn tip_cell(&self, t: u32, k: usize) -> u32 {
        let x = self.corners[t as usize];
        if x[k] > 0 {
            self.corner_cell(t, k, 0)
        } else {
            self.central(t)
        }
    }
}

fn rank_of_idx(tri: &Triangulation, h: u32, idx: u64, w: u64) -> u64 {
    if tri.canonical_side(tri.edge_of(h)) == h {
        idx
    } else {
        w - 1 - idx
    }
}

/// Core engine: cut along `cut`, keep `keep` inside the pieces.
pub fn membership_census(
    tri: &Triangulation,
    cut: &[CurveClass],
    keep: &[CurveClass],
) -> Result<MembershipCensus> {
    let n_edges = tri.n_edges();
    let mut total = vec![0u64; n_edges];
    for c in cut.iter().chain(keep.iter()) {
        tri.check_weights_len(&c.weights().weights)?;
        for (i, x) in c.weights().weights.iter().enumerate() {
            total[i] += x;
        }
    }

    // Trace the summed multicurve and match components back to the inputs.
    let embeddings = trace_embeddings(tri, &total)?;
    let mut comp_role: Vec<Option<(bool, usize)>> = vec![None; embeddings.len()]; // (is_cut, input index)
    let mut used = vec![false; embeddings.len()];
    for (is_cut, list) in [(true, cut), (false, keep)] {
        for (ci, c) in list.iter().enumerate() {
            let mut found = false;
            for (ei, emb) in embeddings.iter().enumerate() {
                if !used[ei] && emb.weights(tri) == *c.weights() {
                    used[ei] = true;
                    comp_role[ei] = Some((is_cut, ci));
                    found = true;
                    break;
                }
            }
            if !found {
                // The summed vector does not decompose into the given curves,
                // so the family has no simultaneous disjoint realization.
                return Err(Error::NotDisjoint(ci, usize::MAX));
            }
        }
    }
    if used.iter().any(|u| !u) {
        return Err(Error::internal("stray component in summed multicurve"));
    }

    let layout = CellLayout::new(tri, total.clone())?;

    // point -> owning component
    let offsets: Vec<usize> = {
        let mut acc = 0usize;
        let mut v = Vec::with_capacity(n_edges);
        for e in 0..n_edges {
            v.push(acc);
            acc += total[e] as usize;
        }
        v
    };
    let n_points: usize = total.iter().map(|&x| x as usize).sum();
    let mut point_comp = vec![usize::MAX; n_points];
    for (ei, emb) in embeddings.iter().enumerate() {
        for &(h, idx) in &emb.steps {
            point_comp[offsets[tri.edge_of(h) as usize] + idx as usize] = ei;
        }
    }

    let mut dsu = Dsu::new(layout.n_cells);
    // glue across edge sub-segments
    for e in 0..n_edges as u32 {
        let we = total[e as usize];
        let h = tri.canonical_side(e);
        let o = tri.opp(h);
        for i in 0..=we {
            dsu.union(layout.cell_of_segment(h, i), layout.cell_of_segment(o, we - i));
        }
    }
    // glue across kept curves: for every chord of a keep component
    let chord_of_point = |h: u32, idx: u64| -> (u32, usize, u64) {
        let we = total[tri.edge_of(h) as usize];
        layout.chord_at(h, rank_of_idx(tri, h, idx, we))
    };
    for (ei, emb) in embeddings.iter().enumerate() {
        let (is_cut, _) = comp_role[ei].unwrap();
        if is_cut {
            continue;
        }
        for &(h, idx) in &emb.steps {
            let (t, k, j) = chord_of_point(h, idx as u64);
            let (a, b) = layout.chord_sides(t, k, j);
            dsu.union(a, b);
        }
    }

    // region ids, deterministic order of first appearance by cell id
    let mut region_of_cell = vec![usize::MAX; layout.n_cells];
    let mut n_regions = 0usize;
    for c in 0..layout.n_cells as u32 {
        let r = dsu.find(c);
        if region_of_cell[r as usize] == usize::MAX {
            region_of_cell[r as usize] = n_regions;
            n_regions += 1;
        }
    }
    let region = |dsu: &mut Dsu, cell: u32| -> usize { region_of_cell[dsu.find(cell) as usize] };

    // census counters
    let mut faces = vec![0i64; n_regions];
    let mut edges_int = vec![0i64; n_regions];
    let mut cut_sides_cnt = vec![0i64; n_regions];
    let mut verts = vec![0i64; n_regions];

    for c in 0..layout.n_cells as u32 {
        faces[region(&mut dsu, c)] += 1;
    }
    // edge sub-segments: interior, once per edge
    for e in 0..n_edges as u32 {
        let we = total[e as usize];
        let h = tri.canonical_side(e);
        for i in 0..=we {
            let r = region(&mut dsu, layout.cell_of_segment(h, i));
            debug_assert_eq!(
                r,
                region(&mut dsu, layout.cell_of_segment(tri.opp(h), we - i))
            );
            edges_int[r] += 1;
        }
    }
    // chords: keep chords are interior edges; cut chords contribute one
    // boundary side to each adjacent region copy. Each chord is seen from
    // both of its endpoints, so walk components and count each chord once
    // via its point on the (unique) side where the arc departs.
    for (ei, emb) in embeddings.iter().enumerate() {
        let (is_cut, _) = comp_role[ei].unwrap();
        for &(h, idx) in &emb.steps {
            let (t, k, j) = chord_of_point(h, idx as u64);
            let (a, b) = layout.chord_sides(t, k, j);
            let (ra, rb) = (region(&mut dsu, a), region(&mut dsu, b));
            if is_cut {
                cut_sides_cnt[ra] += 1;
                cut_sides_cnt[rb] += 1;
            } else {
                debug_assert_eq!(ra, rb);
                edges_int[ra] += 1;
            }
        }
    }
    // vertices: each triangulation vertex sits in the region of its corner
    // tips (all tips of one vertex agree); count once.
    {
        let mut vert_region = vec![usize::MAX; tri.n_vertices()];
        for t in 0..tri.n_triangles() as u32 {
            for k in 0..3 {
                let v = tri.vertex_at_tail(3 * t + k as u32) as usize;
                let r = region(&mut dsu, layout.tip_cell(t, k));
                if vert_region[v] == usize::MAX {
                    vert_region[v] = r;
                    verts[r] += 1;
                } else {
                    debug_assert_eq!(vert_region[v], r);
                }
            }
        }
    }
    // curve points: cut points are doubled (one copy per side), keep points
    // are interior vertices counted once.
    for e in 0..n_edges as u32 {
        let we = total[e as usize];
        let h = tri.canonical_side(e);
        for idx in 0..we {
            let comp = point_comp[offsets[e as usize] + idx as usize];
            let (is_cut, _) = comp_role[comp].unwrap();
            let r_lo = region(&mut dsu, layout.cell_of_segment(h, idx));
            let r_hi = region(&mut dsu, layout.cell_of_segment(h, idx + 1));
            if is_cut {
                verts[r_lo] += 1;
                verts[r_hi] += 1;
            } else {
                debug_assert_eq!(r_lo, r_hi);
                verts[r_lo] += 1;
            }
        }
    }

    // boundary circles: each cut component contributes one circle to the
    // region on each of its two sides.
    let mut boundary = vec![0usize; n_regions];
    let mut cut_sides = vec![(usize::MAX, usize::MAX); cut.len()];
    let mut keep_piece = vec![usize::MAX; keep.len()];
    for (ei, emb) in embeddings.iter().enumerate() {
        let (is_cut, input_idx) = comp_role[ei].unwrap();
        let &(h, idx) = &emb.steps[0];
        let (t, k, j) = chord_of_point(h, idx as u64);
        let (a, b) = layout.chord_sides(t, k, j);
        let (ra, rb) = (region(&mut dsu, a), region(&mut dsu, b));
        if is_cut {
            boundary[ra] += 1;
            boundary[rb] += 1;
            cut_sides[input_idx] = (ra, rb);
        } else {
            keep_piece[input_idx] = ra;
        }
    }

    let pieces: Vec<Piece> = (0..n_regions)
        .map(|r| {
            let chi = verts[r] - (edges_int[r] + cut_sides_cnt[r]) + faces[r];
            let b = boundary[r];
            let genus_twice = 2 - chi - b as i64;
            debug_assert!(genus_twice >= 0 && genus_twice % 2 == 0);
            Piece {
                euler: chi,
                boundary_circles: b,
                genus: (genus_twice / 2) as usize,
            }
        })
        .collect();

    Ok(MembershipCensus {
        pieces: CutPieces { pieces },
        cut_sides,
        keep_piece,
    })
}

/// Cuts the surface along a pairwise-disjoint family and returns the piece
/// census. Euler characteristics sum to `2 - 2g`; the total boundary-circle
/// count is twice the family size.
pub fn cut_along(tri: &Triangulation, curves: &[CurveClass]) -> Result<CutPieces> {
    Ok(membership_census(tri, curves, &[])?.pieces)
}

/// Connectivity-only oracle: is the complement of the family connected?
/// Independent of the census bookkeeping above (no Euler or boundary
/// counting; a plain union-find over cells).
pub fn complement_connected(tri: &Triangulation, curves: &[CurveClass]) -> Result<bool> {
    let mut total = vec![0u64; tri.n_edges()];
    for c in curves {
        tri.check_weights_len(&c.weights().weights)?;
        for (i, x) in c.weights().weights.iter().enumerate() {
            total[i] += x;
        }
    }
    let layout = CellLayout::new(tri, total.clone())?;
    let mut dsu = Dsu::new(layout.n_cells);
    for e in 0..tri.n_edges() as u32 {
        let we = total[e as usize];
        let h = tri.canonical_side(e);
        let o = tri.opp(h);
        for i in 0..=we {
            dsu.union(layout.cell_of_segment(h, i), layout.cell_of_segment(o, we - i));
        }
    }
    let root = dsu.find(0);
    Ok((1..layout.n_cells as u32).all(|c| dsu.find(c) == root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{
        build_standard_triangulation, standard_meridian, two_handle_curve, NormalMulticurve,
    };

    #[test]
    fn empty_family_census() {
        let t = build_standard_triangulation(2).unwrap();
        let c = cut_along(&t, &[]).unwrap();
        assert_eq!(c.count(), 1);
        assert_eq!(c.pieces[0].euler, -2);
        assert_eq!(c.pieces[0].boundary_circles, 0);
        assert_eq!(c.pieces[0].genus, 2);
    }

    #[test]
    fn cut_along_one_meridian() {
        // One non-separating curve: 1 piece, chi = -2, 2 boundary circles,
        // genus 1 (Euler additivity under cutting).
        let t = build_standard_triangulation(2).unwrap();
        let m = standard_meridian(&t, 2, 0);
        let c = cut_along(&t, &[m]).unwrap();
        assert_eq!(c.count(), 1);
        assert_eq!(c.pieces[0].euler, -2);
        assert_eq!(c.pieces[0].boundary_circles, 2);
        assert_eq!(c.pieces[0].genus, 1);
    }

    #[test]
    fn cut_along_geometric_cut_system() {
        // Two handle meridians: the complement is a 4-punctured sphere.
        let t = build_standard_triangulation(2).unwrap();
        let m0 = standard_meridian(&t, 2, 0);
        let m1 = standard_meridian(&t, 2, 1);
        let c = cut_along(&t, &[m0, m1]).unwrap();
        assert_eq!(c.count(), 1);
        assert_eq!(c.pieces[0].boundary_circles, 4);
        assert_eq!(c.pieces[0].euler, -2);
        assert_eq!(c.pieces[0].genus, 0);
    }

    #[test]
    fn euler_sums_are_conserved() {
        let t = build_standard_triangulation(2).unwrap();
        let m0 = standard_meridian(&t, 2, 0);
        let m1 = standard_meridian(&t, 2, 1);
        let g01 = two_handle_curve(&t, 2, 0, 1);
        for family in [
            vec![m0.clone()],
            vec![m0.clone(), m1.clone()],
            vec![m0.clone(), m1.clone(), g01.clone()],
        ] {
            let c = cut_along(&t, &family).unwrap();
            assert_eq!(c.total_euler(), -2);
            assert_eq!(c.total_boundary(), 2 * family.len());
        }
    }

    #[test]
    fn vertex_link_cut_has_disk() {
        let t = build_standard_triangulation(2).unwrap();
        let link = CurveClass::new_unchecked(NormalMulticurve::new(vec![2; t.n_edges()]));
        let c = cut_along(&t, &[link]).unwrap();
        assert_eq!(c.count(), 2);
        assert!(c.has_disk());
    }
}
