use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A closed oriented surface given as a gluing of oriented triangles.
///
/// Triangle `t` owns the three directed sides (half-edges) `3t`, `3t+1`,
/// `3t+2`, listed counterclockwise; side `3t+k` runs from corner `k` to
/// corner `k+1`. `opp` is a fixed-point-free involution pairing sides, with
/// the orientation convention `head(h) = tail(opp(h))`. Unordered side pairs
/// are the edges; every edge is crossed by curves, so edge indices are the
/// coordinate slots of normal multicurves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    n_triangles: usize,
    opp: Vec<u32>,
    edge_of: Vec<u32>,
    n_edges: usize,
    n_vertices: usize,
    /// corner (half-edge tail) -> vertex id
    vertex_of: Vec<u32>,
    /// edge -> its smaller side id
    canon_side: Vec<u32>,
}

impl Triangulation {
    /// Builds a surface from a side-gluing involution. Checks that `opp` is a
    /// fixed-point-free involution on `3 * n_triangles` sides.
    pub fn from_gluing(n_triangles: usize, opp: Vec<u32>) -> Result<Self> {
        let n_sides = 3 * n_triangles;
        if opp.len() != n_sides {
            return Err(Error::invalid("gluing table length mismatch"));
        }
        for h in 0..n_sides {
            let o = opp[h] as usize;
            if o >= n_sides || o == h || opp[o] as usize != h {
                return Err(Error::invalid("gluing is not a fixed-point-free involution"));
            }
        }
        // Edge ids in order of the smaller side id.
        let mut edge_of = vec![u32::MAX; n_sides];
        let mut canon_side = Vec::new();
        let mut n_edges = 0u32;
        for h in 0..n_sides {
            if edge_of[h] == u32::MAX {
                edge_of[h] = n_edges;
                edge_of[opp[h] as usize] = n_edges;
                canon_side.push(h as u32);
                n_edges += 1;
            }
        }
        // Vertices: orbits of around(h) = next(opp(h)), which fixes tails.
        let mut vertex_of = vec![u32::MAX; n_sides];
        let mut n_vertices = 0u32;
        for h in 0..n_sides {
            if vertex_of[h] != u32::MAX {
                continue;
            }
            let mut cur = h;
            loop {
                vertex_of[cur] = n_vertices;
                cur = Self::next_static(opp[cur] as usize);
                if cur == h {
                    break;
                }
            }
            n_vertices += 1;
        }
        Ok(Triangulation {
            n_triangles,
            opp,
            edge_of,
            n_edges: n_edges as usize,
            n_vertices: n_vertices as usize,
            vertex_of,
            canon_side,
        })
    }

    fn next_static(h: usize) -> usize {
        let t = h / 3;
        3 * t + (h + 1) % 3
    }

    pub fn n_triangles(&self) -> usize {
        self.n_triangles
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_sides(&self) -> usize {
        3 * self.n_triangles
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.n_edges as i64 + self.n_triangles as i64
    }

    /// Genus of the closed surface, from the Euler characteristic.
    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0);
        ((2 - chi) / 2) as usize
    }

    #[inline]
    pub fn next(&self, h: u32) -> u32 {
        let t = h / 3;
        3 * t + (h + 1) % 3
    }

    #[inline]
    pub fn prev(&self, h: u32) -> u32 {
        let t = h / 3;
        3 * t + (h + 2) % 3
    }

    #[inline]
    pub fn opp(&self, h: u32) -> u32 {
        self.opp[h as usize]
    }

    #[inline]
    pub fn edge_of(&self, h: u32) -> u32 {
        self.edge_of[h as usize]
    }

    #[inline]
    pub fn tri_of(&self, h: u32) -> u32 {
        h / 3
    }

    #[inline]
    pub fn side_in_tri(&self, h: u32) -> u32 {
        h % 3
    }

    /// Vertex at the tail of side `h`.
    #[inline]
    pub fn vertex_at_tail(&self, h: u32) -> u32 {
        self.vertex_of[h as usize]
    }

    /// The two sides of an edge, smaller id first.
    pub fn sides_of_edge(&self, e: u32) -> (u32, u32) {
        let h = self.canonical_side(e);
        (h, self.opp(h))
    }

    /// The smaller of the two sides carrying edge `e`. Per-edge point orders
    /// are stored along this side's direction.
    #[inline]
    pub fn canonical_side(&self, e: u32) -> u32 {
        self.canon_side[e as usize]
    }

    /// The three edges of triangle `t`, by side.
    pub fn tri_edges(&self, t: u32) -> [u32; 3] {
        [
            self.edge_of(3 * t),
            self.edge_of(3 * t + 1),
            self.edge_of(3 * t + 2),
        ]
    }

    pub fn check_weights_len(&self, w: &[u64]) -> Result<()> {
        if w.len() != self.n_edges {
            return Err(Error::WeightLength {
                got: w.len(),
                want: self.n_edges,
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> TriangulationJson {
        TriangulationJson {
            genus: self.genus(),
            triangles: (0..self.n_triangles as u32)
                .map(|t| self.tri_edges(t))
                .collect(),
            gluing: (0..self.n_sides() as u32)
                .filter(|&h| h < self.opp(h))
                .map(|h| [h, self.opp(h)])
                .collect(),
        }
    }

    pub fn from_json(j: &TriangulationJson) -> Result<Self> {
        let n_tri = j.triangles.len();
        let mut opp = vec![u32::MAX; 3 * n_tri];
        for &[a, b] in &j.gluing {
            if a as usize >= opp.len() || b as usize >= opp.len() {
                return Err(Error::invalid("gluing side out of range"));
            }
            opp[a as usize] = b;
            opp[b as usize] = a;
        }
        let tri = Self::from_gluing(n_tri, opp)?;
        if tri.genus() != j.genus {
            return Err(Error::invalid("declared genus does not match gluing"));
        }
        for (t, e3) in j.triangles.iter().enumerate() {
            if tri.tri_edges(t as u32) != *e3 {
                return Err(Error::invalid("triangle edge labels do not match gluing"));
            }
        }
        Ok(tri)
    }
}

/// Stable JSON form: triangles as edge triples plus the side gluing.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TriangulationJson {
    pub genus: usize,
    pub triangles: Vec<[u32; 3]>,
    pub gluing: Vec<[u32; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_standard_triangulation;

    #[test]
    fn standard_counts_small_genus() {
        // Euler characteristic forces (V,E,F) for the one-vertex model.
        for (g, v, e, f) in [(1, 1, 3, 2), (2, 1, 9, 6), (3, 1, 15, 10)] {
            let t = build_standard_triangulation(g).unwrap();
            assert_eq!(t.n_vertices(), v, "genus {g}");
            assert_eq!(t.n_edges(), e, "genus {g}");
            assert_eq!(t.n_triangles(), f, "genus {g}");
            assert_eq!(t.genus(), g);
        }
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(matches!(
            build_standard_triangulation(0),
            Err(Error::BadGenus(0))
        ));
    }

    #[test]
    fn deterministic_and_json_round_trip() {
        let t1 = build_standard_triangulation(2).unwrap();
        let t2 = build_standard_triangulation(2).unwrap();
        assert_eq!(t1, t2);
        let j = t1.to_json();
        let back = Triangulation::from_json(&j).unwrap();
        assert_eq!(t1, back);
        let s1 = serde_json::to_string(&j).unwrap();
        let s2 = serde_json::to_string(&back.to_json()).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn gluing_must_be_involution() {
        assert!(Triangulation::from_gluing(1, vec![0, 1, 2]).is_err());
        assert!(Triangulation::from_gluing(1, vec![1, 0, 2]).is_err());
    }
}
