//! Fixed-length tuples of TFNs with componentwise operations.
//!
//! `TFNⁿ` with these operations is a semi-vector space, not a vector space:
//! `U + (−1̃)U` is in general not the zero vector. General subtraction is
//! spelled `u.add(&v.scale(Crisp::new(-1.0)?)?)`.

use std::fmt;

use crate::error::{Result, TfnError};
use crate::number::{Crisp, Tfn};
use crate::order::leq_ot;

/// A non-empty vector of TFNs. Its length is fixed per value and checked at
/// every binary operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TfnVector(Vec<Tfn>);

impl TfnVector {
    pub fn new(components: Vec<Tfn>) -> Result<Self> {
        if components.is_empty() {
            return Err(TfnError::EmptyVector);
        }
        Ok(TfnVector(components))
    }

    /// The zero vector of length `n`.
    pub fn zero(n: usize) -> Result<Self> {
        TfnVector::new(vec![Tfn::ZERO; n])
    }

    /// `n` copies of `value`.
    pub fn repeat(value: Tfn, n: usize) -> Result<Self> {
        TfnVector::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn components(&self) -> &[Tfn] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Tfn> {
        self.0
    }

    fn check_len(&self, other: &TfnVector) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(TfnError::DimensionMismatch { expected: self.len(), found: other.len() })
        }
    }

    /// Componentwise sum.
    pub fn add(&self, other: &TfnVector) -> Result<TfnVector> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| x.checked_add(y))
            .collect::<Result<Vec<_>>>()
            .map(TfnVector)
    }

    /// `r̃U`, scaling every component.
    pub fn scale(&self, r: Crisp) -> Result<TfnVector> {
        self.0.iter().map(|x| x.scale(r)).collect::<Result<Vec<_>>>().map(TfnVector)
    }

    /// `U ≤_{OTⁿ} V`: every component of `self` is `≤_OT` the matching
    /// component of `other`. This is a partial order once `n > 1`.
    pub fn leq_otn(&self, other: &TfnVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(x, y)| leq_ot(x, y)))
    }

    /// `U − U`, componentwise. Every component is 0-isosceles and the result
    /// dominates the zero vector.
    pub fn self_diff(&self) -> TfnVector {
        let diff = self
            .0
            .iter()
            .map(|x| x.checked_sub(x))
            .collect::<Result<Vec<_>>>();
        match diff {
            Ok(v) => TfnVector(v),
            // c − a can overflow only for spans wider than f64::MAX
            Err(_) => TfnVector(
                self.0
                    .iter()
                    .map(|x| {
                        let h = (x.c() - x.a()).min(f64::MAX);
                        Tfn::new(-h, 0.0, h).expect("clamped span is finite")
                    })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for TfnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<Tfn>> for TfnVector {
    type Error = TfnError;

    fn try_from(components: Vec<Tfn>) -> Result<Self> {
        TfnVector::new(components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{classify_sign, SignClass};
    use proptest::prelude::*;

    fn t(a: f64, b: f64, c: f64) -> Tfn {
        Tfn::new(a, b, c).unwrap()
    }

    fn v(xs: &[(f64, f64, f64)]) -> TfnVector {
        TfnVector::new(xs.iter().map(|&(a, b, c)| t(a, b, c)).collect()).unwrap()
    }

    fn r(x: f64) -> Crisp {
        Crisp::new(x).unwrap()
    }

    #[test]
    fn empty_vectors_are_rejected() {
        assert_eq!(TfnVector::new(vec![]), Err(TfnError::EmptyVector));
        assert_eq!(TfnVector::zero(0), Err(TfnError::EmptyVector));
    }

    #[test]
    fn addition() {
        let u = v(&[(1.0, 2.0, 3.0), (0.0, 0.0, 1.0)]);
        let w = v(&[(0.0, 1.0, 2.0), (0.0, 0.0, 0.0)]);
        assert_eq!(u.add(&w).unwrap(), v(&[(1.0, 3.0, 5.0), (0.0, 0.0, 1.0)]));
        assert_eq!(u.add(&TfnVector::zero(2).unwrap()).unwrap(), u);
        assert_eq!(u.add(&w).unwrap(), w.add(&u).unwrap());
        assert_eq!(
            u.add(&TfnVector::zero(3).unwrap()),
            Err(TfnError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn scaling() {
        let u = v(&[(1.0, 2.0, 3.0), (-4.0, 0.5, 0.75)]);
        assert_eq!(u.scale(Crisp::ONE).unwrap(), u);
        assert_eq!(u.scale(Crisp::ZERO).unwrap(), TfnVector::zero(2).unwrap());
        assert_eq!(v(&[(1.0, 2.0, 3.0)]).scale(r(2.0)).unwrap(), v(&[(2.0, 4.0, 6.0)]));
    }

    #[test]
    fn product_order() {
        let u = v(&[(1.0, 2.0, 3.0), (0.0, 1.0, 2.0)]);
        assert!(u.leq_otn(&u).unwrap());
        assert!(u.leq_otn(&v(&[(1.0, 2.0, 4.0), (0.0, 1.0, 2.0)])).unwrap());
        assert!(!v(&[(1.0, 2.0, 4.0), (0.0, 1.0, 2.0)])
            .leq_otn(&v(&[(1.0, 2.0, 3.0), (5.0, 6.0, 7.0)]))
            .unwrap());
        // incomparable pair
        let p = v(&[(0.0, 1.0, 1.0), (0.0, 2.0, 2.0)]);
        let q = v(&[(0.0, 2.0, 2.0), (0.0, 1.0, 1.0)]);
        assert!(!p.leq_otn(&q).unwrap() && !q.leq_otn(&p).unwrap());
        assert!(u.leq_otn(&TfnVector::zero(1).unwrap()).is_err());
    }

    #[test]
    fn self_difference() {
        assert_eq!(v(&[(0.0, 1.0, 2.0)]).self_diff(), v(&[(-2.0, 0.0, 2.0)]));
        assert_eq!(
            v(&[(3.0, 3.0, 3.0), (-1.0, -1.0, -1.0)]).self_diff(),
            TfnVector::zero(2).unwrap()
        );
        let wide = v(&[(-f64::MAX, 0.0, f64::MAX)]);
        assert_eq!(wide.self_diff(), v(&[(-f64::MAX, 0.0, f64::MAX)]));
    }

    #[test]
    fn opposite_does_not_cancel() {
        let u = v(&[(0.0, 1.0, 2.0)]);
        let sum = u.add(&u.scale(r(-1.0)).unwrap()).unwrap();
        assert_eq!(sum, v(&[(-2.0, 0.0, 2.0)]));
        assert_ne!(sum, TfnVector::zero(1).unwrap());
    }

    fn lattice_tfn() -> impl Strategy<Value = Tfn> {
        (-40i32..=40, 0i32..=8, 0i32..=8).prop_map(|(b, l, r)| {
            let b = f64::from(b) / 4.0;
            t(b - f64::from(l) / 4.0, b, b + f64::from(r) / 4.0)
        })
    }

    fn vectors(n: usize) -> impl Strategy<Value = TfnVector> {
        prop::collection::vec(lattice_tfn(), n).prop_map(|xs| TfnVector::new(xs).unwrap())
    }

    fn same_sign_pair() -> impl Strategy<Value = (Crisp, Crisp)> {
        (0i32..=8, 0i32..=8, any::<bool>()).prop_map(|(p, q, neg)| {
            let s = if neg { -0.5 } else { 0.5 };
            (r(s * f64::from(p)), r(s * f64::from(q)))
        })
    }

    proptest! {
        #[test]
        fn addition_laws((u, w, z) in (1usize..5).prop_flat_map(|n| (vectors(n), vectors(n), vectors(n)))) {
            prop_assert_eq!(u.add(&w).unwrap(), w.add(&u).unwrap());
            prop_assert_eq!(u.add(&w).unwrap().add(&z).unwrap(), u.add(&w.add(&z).unwrap()).unwrap());
        }

        #[test]
        fn scalar_laws((u, w) in (1usize..5).prop_flat_map(|n| (vectors(n), vectors(n))), (p, q) in same_sign_pair(), k in -8i32..=8) {
            let s = r(f64::from(k) / 2.0);
            // r̃(t̃U) = (r̃t̃)U holds for any signs
            prop_assert_eq!(u.scale(q).unwrap().scale(s).unwrap(), u.scale(r(s.value() * q.value())).unwrap());
            prop_assert_eq!(u.add(&w).unwrap().scale(s).unwrap(), u.scale(s).unwrap().add(&w.scale(s).unwrap()).unwrap());
            prop_assert_eq!(
                u.scale(r(p.value() + q.value())).unwrap(),
                u.scale(p).unwrap().add(&u.scale(q).unwrap()).unwrap()
            );
        }

        #[test]
        fn product_order_is_partial_order((u, w, z) in (1usize..4).prop_flat_map(|n| (vectors(n), vectors(n), vectors(n)))) {
            prop_assert!(u.leq_otn(&u).unwrap());
            if u.leq_otn(&w).unwrap() && w.leq_otn(&u).unwrap() {
                prop_assert_eq!(&u, &w);
            }
            if u.leq_otn(&w).unwrap() && w.leq_otn(&z).unwrap() {
                prop_assert!(u.leq_otn(&z).unwrap());
            }
        }

        #[test]
        fn self_difference_dominates_zero(u in (1usize..6).prop_flat_map(vectors)) {
            let d = u.self_diff();
            prop_assert!(d.components().iter().all(Tfn::is_zero_isosceles));
            prop_assert!(TfnVector::zero(u.len()).unwrap().leq_otn(&d).unwrap());
            prop_assert!(d.components().iter().all(|x| classify_sign(x) != SignClass::Negative));
        }
    }
}
