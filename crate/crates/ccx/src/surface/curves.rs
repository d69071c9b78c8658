use serde::{Deserialize, Serialize};

use crate::surface::arrangement::cut_along;
use crate::surface::normal::{trace_components, NormalMulticurve};
use crate::surface::Triangulation;
use crate::{Error, Result};

/// Isotopy class of an essential simple closed curve, canonically encoded by
/// its normal coordinates on a fixed triangulation. Two classes are equal
/// exactly when their weight vectors are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveClass {
    coords: NormalMulticurve,
}

impl CurveClass {
    /// Validates that `coords` traces to a single essential component.
    pub fn new(tri: &Triangulation, coords: NormalMulticurve) -> Result<CurveClass> {
        let comps = trace_components(tri, &coords.weights)?;
        if comps.len() != 1 {
            return Err(Error::NotConnected(comps.len()));
        }
        let c = CurveClass { coords };
        if !is_essential_single(tri, &c)? {
            return Err(Error::NotEssential);
        }
        Ok(c)
    }

    /// Wraps coordinates without validation. For tests and for callers that
    /// have already established the invariants.
    pub fn new_unchecked(coords: NormalMulticurve) -> CurveClass {
        CurveClass { coords }
    }

    pub fn weights(&self) -> &NormalMulticurve {
        &self.coords
    }

    pub fn total_weight(&self) -> u64 {
        self.coords.total_weight()
    }
}

fn is_essential_single(tri: &Triangulation, c: &CurveClass) -> Result<bool> {
    let census = cut_along(tri, std::slice::from_ref(c))?;
    Ok(!census.has_disk())
}

/// A connected curve is essential iff cutting along it leaves no disk piece.
/// Disconnected input is rejected.
pub fn is_essential(tri: &Triangulation, c: &NormalMulticurve) -> Result<bool> {
    let comps = trace_components(tri, &c.weights)?;
    if comps.len() != 1 {
        return Err(Error::NotConnected(comps.len()));
    }
    is_essential_single(tri, &CurveClass::new_unchecked(c.clone()))
}

/// An essential curve is separating iff cutting along it yields two pieces.
pub fn is_separating(tri: &Triangulation, c: &CurveClass) -> Result<bool> {
    let census = cut_along(tri, std::slice::from_ref(c))?;
    Ok(census.count() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_standard_triangulation, standard_meridian};

    #[test]
    fn vertex_link_is_not_essential() {
        let t = build_standard_triangulation(2).unwrap();
        let link = NormalMulticurve::new(vec![2; t.n_edges()]);
        assert!(!is_essential(&t, &link).unwrap());
        assert!(CurveClass::new(&t, link).is_err());
    }

    #[test]
    fn meridian_is_essential_and_non_separating() {
        let t = build_standard_triangulation(2).unwrap();
        let m = standard_meridian(&t, 2, 0);
        assert!(is_essential(&t, m.weights()).unwrap());
        assert!(!is_separating(&t, &m).unwrap());
    }

    #[test]
    fn disconnected_input_rejected() {
        let t = build_standard_triangulation(2).unwrap();
        let m0 = standard_meridian(&t, 2, 0);
        let m1 = standard_meridian(&t, 2, 1);
        let sum = m0.weights().sum(m1.weights());
        assert!(matches!(
            is_essential(&t, &sum),
            Err(Error::NotConnected(2))
        ));
    }
}
