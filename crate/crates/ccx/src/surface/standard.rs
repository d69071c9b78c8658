use crate::surface::{CurveClass, NormalMulticurve, Triangulation};
use crate::{Error, Result};

/// The canonical one-vertex triangulation of the closed genus-`g` surface:
/// the 4g-gon with the standard side word, fanned from one polygon vertex.
///
/// Counts: 1 vertex, 6g-3 edges, 4g-2 triangles. Deterministic labeling:
/// triangle `t` is the fan triangle on polygon vertices `(0, t+1, t+2)`.
pub fn build_standard_triangulation(g: usize) -> Result<Triangulation> {
    if g == 0 {
        return Err(Error::BadGenus(0));
    }
    let n = 4 * g; // polygon sides
    let n_tri = n - 2;
    let mut opp = vec![u32::MAX; 3 * n_tri];
    let mut glue = |a: u32, b: u32| {
        opp[a as usize] = b;
        opp[b as usize] = a;
    };
    // interior diagonals: side 2 of triangle t with side 0 of triangle t+1
    for t in 0..n_tri as u32 - 1 {
        glue(3 * t + 2, 3 * (t + 1));
    }
    // polygon side i (1-based) as a half-edge
    let poly_side = |i: usize| -> u32 {
        if i == 1 {
            0
        } else if i == n {
            3 * (n_tri as u32 - 1) + 2
        } else {
            3 * (i as u32 - 2) + 1
        }
    };
    // standard word: sides 4h+1 ~ 4h+3 and 4h+2 ~ 4h+4
    for h in 0..g {
        glue(poly_side(4 * h + 1), poly_side(4 * h + 3));
        glue(poly_side(4 * h + 2), poly_side(4 * h + 4));
    }
    let tri = Triangulation::from_gluing(n_tri, opp)?;
    debug_assert_eq!(tri.n_vertices(), 1);
    debug_assert_eq!(tri.genus(), g);
    Ok(tri)
}

fn poly_side_edge(tri: &Triangulation, g: usize, i: usize) -> u32 {
    let n = 4 * g;
    let h = if i == 1 {
        0
    } else if i == n {
        3 * (n as u32 - 3) + 2
    } else {
        3 * (i as u32 - 2) + 1
    };
    tri.edge_of(h)
}

/// Edge crossed by the handle-`h` "a" loop (polygon sides 4h+1 and 4h+3).
pub fn edge_a(tri: &Triangulation, g: usize, h: usize) -> u32 {
    poly_side_edge(tri, g, 4 * h + 1)
}

/// Edge crossed by the handle-`h` "b" loop.
pub fn edge_b(tri: &Triangulation, g: usize, h: usize) -> u32 {
    poly_side_edge(tri, g, 4 * h + 2)
}

/// Fan diagonal from the base polygon vertex to polygon vertex `j`,
/// for `2 <= j <= 4g-2`.
pub fn edge_d(tri: &Triangulation, _g: usize, j: usize) -> u32 {
    tri.edge_of(3 * (j as u32 - 1))
}

/// Weight vector of the polygon chord joining interior points of polygon
/// sides `i` and `i2` (1-based, `i < i2`): it crosses those two glued sides
/// once and every separating fan diagonal once.
fn chord_weights(tri: &Triangulation, g: usize, w: &mut [u64], i: usize, i2: usize) {
    assert!(i < i2);
    w[poly_side_edge(tri, g, i) as usize] += 1;
    w[poly_side_edge(tri, g, i2) as usize] += 1;
    for j in i.max(2)..=(i2 - 1).min(4 * g - 2) {
        w[edge_d(tri, g, j) as usize] += 1;
    }
}

/// Meridian of handle `h`: crosses the `a_h` edge once.
pub fn standard_meridian(tri: &Triangulation, g: usize, h: usize) -> CurveClass {
    let mut w = vec![0u64; tri.n_edges()];
    chord_weights(tri, g, &mut w, 4 * h + 1, 4 * h + 3);
    CurveClass::new(tri, NormalMulticurve::new(w)).expect("standard meridian is a curve")
}

/// Longitude of handle `h`: crosses the `b_h` edge once; meets the meridian
/// of the same handle exactly once.
pub fn standard_longitude(tri: &Triangulation, g: usize, h: usize) -> CurveClass {
    let mut w = vec![0u64; tri.n_edges()];
    chord_weights(tri, g, &mut w, 4 * h + 2, 4 * h + 4);
    CurveClass::new(tri, NormalMulticurve::new(w)).expect("standard longitude is a curve")
}

/// Non-separating curve through handles `h1 < h2` (one crossing with each of
/// the two `a` edges); disjoint from the meridians.
pub fn two_handle_curve(tri: &Triangulation, g: usize, h1: usize, h2: usize) -> CurveClass {
    assert!(h1 < h2 && h2 < g);
    let mut w = vec![0u64; tri.n_edges()];
    chord_weights(tri, g, &mut w, 4 * h1 + 1, 4 * h2 + 1);
    chord_weights(tri, g, &mut w, 4 * h1 + 3, 4 * h2 + 3);
    CurveClass::new(tri, NormalMulticurve::new(w)).expect("two-handle curve is a curve")
}

/// A family of 3g-3 pairwise-disjoint, pairwise-distinct, non-separating
/// curve classes on the standard genus-`g` surface (g = 2 or 3).
pub fn standard_disjoint_family(tri: &Triangulation, g: usize) -> Result<Vec<CurveClass>> {
    match g {
        2 => Ok(vec![
            standard_meridian(tri, g, 0),
            standard_meridian(tri, g, 1),
            two_handle_curve(tri, g, 0, 1),
        ]),
        3 => Ok(vec![
            standard_meridian(tri, g, 0),
            standard_meridian(tri, g, 1),
            standard_meridian(tri, g, 2),
            two_handle_curve(tri, g, 0, 1),
            two_handle_curve(tri, g, 1, 2),
            two_handle_curve(tri, g, 0, 2),
        ]),
        _ => Err(Error::BadGenus(g)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::trace_components;

    #[test]
    fn standard_curves_are_single_components() {
        for g in [1usize, 2, 3] {
            let t = build_standard_triangulation(g).unwrap();
            for h in 0..g {
                let m = standard_meridian(&t, g, h);
                assert_eq!(trace_components(&t, &m.weights().weights).unwrap().len(), 1);
                let l = standard_longitude(&t, g, h);
                assert_eq!(trace_components(&t, &l.weights().weights).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn two_handle_curve_is_connected() {
        let t = build_standard_triangulation(2).unwrap();
        let c = two_handle_curve(&t, 2, 0, 1);
        assert_eq!(trace_components(&t, &c.weights().weights).unwrap().len(), 1);
    }
}
