//! The registered spaces.

use std::cmp::Ordering;

use super::space::{ExtendedPoint, HullError, MetricSpace, NearstandardVerdict, SpaceId, SpaceMeta};
use crate::cover::{
    classify_point, completion_distance, cover_distance, CompletionPoint, CoverClassification, CoverPoint,
};
use crate::lcf::{LcError, LeviCivita, MagnitudeClass, Precision, Truth};
use crate::rational::{int, Rational};

pub struct RationalsLine;
pub struct EuclideanPlane;
pub struct Cover;
pub struct CoverCompletion;

static RATIONALS_LINE: RationalsLine = RationalsLine;
static EUCLIDEAN_PLANE: EuclideanPlane = EuclideanPlane;
static COVER: Cover = Cover;
static COVER_COMPLETION: CoverCompletion = CoverCompletion;

pub fn space(id: SpaceId) -> &'static dyn MetricSpace {
    match id {
        SpaceId::RationalsLine => &RATIONALS_LINE,
        SpaceId::EuclideanPlane => &EUCLIDEAN_PLANE,
        SpaceId::Cover => &COVER,
        SpaceId::CoverCompletion => &COVER_COMPLETION,
    }
}

fn finite_truth(class: MagnitudeClass) -> Truth {
    match class {
        MagnitudeClass::Infinitesimal | MagnitudeClass::Appreciable => Truth::True,
        MagnitudeClass::Infinite => Truth::False,
        MagnitudeClass::Unknown => Truth::Unknown,
    }
}

fn constant(c: crate::CoefficientInterval) -> LeviCivita {
    LeviCivita::from_interval(c)
}

/// `sqrt(x)` known to absolute order `order`.
fn sqrt_to_order(x: &LeviCivita, order: &Rational, bits: u32) -> Result<LeviCivita, LcError> {
    if x.is_exact_zero() {
        return Ok(LeviCivita::zero());
    }
    let q = x
        .leading()
        .map(|t| t.exponent.clone())
        .ok_or(LcError::Indeterminate { exponent: x.truncation().finite().cloned() })?;
    x.sqrt(&(order + &q / int(2)), bits)
}

impl MetricSpace for RationalsLine {
    fn id(&self) -> SpaceId {
        SpaceId::RationalsLine
    }

    fn basepoint(&self) -> ExtendedPoint {
        ExtendedPoint::new_unchecked(SpaceId::RationalsLine, vec![LeviCivita::zero()])
    }

    fn metadata(&self) -> SpaceMeta {
        SpaceMeta { is_complete: false, completion_is_hb: true }
    }

    fn validate(&self, _coords: &[LeviCivita]) -> Result<(), HullError> {
        Ok(())
    }

    fn distance(&self, a: &ExtendedPoint, b: &ExtendedPoint, _precision: &Precision) -> Result<LeviCivita, HullError> {
        Ok((&a.coords()[0] - &b.coords()[0]).abs()?)
    }

    /// Finite points approach their standard part, and the rationals are dense in the reals.
    fn approachable(&self, a: &ExtendedPoint, _precision: &Precision) -> Truth {
        finite_truth(a.coords()[0].classify_magnitude())
    }

    /// Nearstandard in the rationals only when the standard part is an exact
    /// rational. A non-degenerate enclosure stands for an irrational real such
    /// as `sqrt(2)`.
    fn nearstandard(&self, a: &ExtendedPoint, _precision: &Precision) -> NearstandardVerdict {
        let x = &a.coords()[0];
        match finite_truth(x.classify_magnitude()) {
            Truth::True => match x.standard_part() {
                Ok(st) if st.is_exact() => {
                    NearstandardVerdict::Near(ExtendedPoint::new_unchecked(SpaceId::RationalsLine, vec![constant(st)]))
                }
                Ok(_) => NearstandardVerdict::Not,
                Err(_) => NearstandardVerdict::Unknown,
            },
            Truth::False => NearstandardVerdict::Not,
            Truth::Unknown => NearstandardVerdict::Unknown,
        }
    }
}

impl MetricSpace for EuclideanPlane {
    fn id(&self) -> SpaceId {
        SpaceId::EuclideanPlane
    }

    fn basepoint(&self) -> ExtendedPoint {
        ExtendedPoint::new_unchecked(SpaceId::EuclideanPlane, vec![LeviCivita::zero(), LeviCivita::zero()])
    }

    fn metadata(&self) -> SpaceMeta {
        SpaceMeta { is_complete: true, completion_is_hb: true }
    }

    fn validate(&self, _coords: &[LeviCivita]) -> Result<(), HullError> {
        Ok(())
    }

    fn distance(&self, a: &ExtendedPoint, b: &ExtendedPoint, precision: &Precision) -> Result<LeviCivita, HullError> {
        let dx = &a.coords()[0] - &b.coords()[0];
        let dy = &a.coords()[1] - &b.coords()[1];
        let sq = &(&dx * &dx) + &(&dy * &dy);
        Ok(sqrt_to_order(&sq, &precision.order, precision.bits)?)
    }

    fn approachable(&self, a: &ExtendedPoint, _precision: &Precision) -> Truth {
        let x = finite_truth(a.coords()[0].classify_magnitude());
        let y = finite_truth(a.coords()[1].classify_magnitude());
        match (x, y) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    fn nearstandard(&self, a: &ExtendedPoint, precision: &Precision) -> NearstandardVerdict {
        match self.approachable(a, precision) {
            Truth::True => {
                let st: Result<Vec<_>, _> = a.coords().iter().map(|x| x.standard_part().map(constant)).collect();
                match st {
                    Ok(coords) => {
                        NearstandardVerdict::Near(ExtendedPoint::new_unchecked(SpaceId::EuclideanPlane, coords))
                    }
                    Err(_) => NearstandardVerdict::Unknown,
                }
            }
            Truth::False => NearstandardVerdict::Not,
            Truth::Unknown => NearstandardVerdict::Unknown,
        }
    }
}

fn cover_point(a: &ExtendedPoint) -> Result<CoverPoint, HullError> {
    Ok(CoverPoint::new(a.coords()[0].clone(), a.coords()[1].clone())?)
}

fn completion_point(a: &ExtendedPoint) -> Result<CompletionPoint, HullError> {
    if a.coords()[0].is_exact_zero() {
        Ok(CompletionPoint::Origin)
    } else {
        Ok(CompletionPoint::Point(cover_point(a)?))
    }
}

fn cover_approachable(a: &ExtendedPoint) -> Truth {
    match cover_point(a).map(|p| classify_point(&p)) {
        Ok(CoverClassification::Nearstandard { .. } | CoverClassification::OriginHalo { .. }) => Truth::True,
        Ok(CoverClassification::FiniteInapproachable | CoverClassification::OutsideGalaxy) => Truth::False,
        _ => Truth::Unknown,
    }
}

fn cover_nearstandard(a: &ExtendedPoint, space: SpaceId) -> NearstandardVerdict {
    match cover_point(a).map(|p| classify_point(&p)) {
        Ok(CoverClassification::Nearstandard { r, zeta }) => {
            NearstandardVerdict::Near(ExtendedPoint::new_unchecked(space, vec![constant(r), constant(zeta)]))
        }
        Ok(CoverClassification::OriginHalo { .. }) if space == SpaceId::CoverCompletion => {
            NearstandardVerdict::Near(ExtendedPoint::origin())
        }
        Ok(CoverClassification::Unknown) | Err(_) => NearstandardVerdict::Unknown,
        Ok(_) => NearstandardVerdict::Not,
    }
}

impl MetricSpace for Cover {
    fn id(&self) -> SpaceId {
        SpaceId::Cover
    }

    fn basepoint(&self) -> ExtendedPoint {
        ExtendedPoint::new_unchecked(SpaceId::Cover, vec![LeviCivita::one(), LeviCivita::zero()])
    }

    fn metadata(&self) -> SpaceMeta {
        SpaceMeta { is_complete: false, completion_is_hb: false }
    }

    fn validate(&self, coords: &[LeviCivita]) -> Result<(), HullError> {
        match coords[0].compare(&LeviCivita::zero()) {
            Ok(Ordering::Greater) => Ok(()),
            _ => Err(HullError::Domain(format!("cover radius {} is not positive", coords[0]))),
        }
    }

    fn distance(&self, a: &ExtendedPoint, b: &ExtendedPoint, precision: &Precision) -> Result<LeviCivita, HullError> {
        Ok(cover_distance(&cover_point(a)?, &cover_point(b)?, precision)?)
    }

    /// Delegates to the cover classification: nearstandard points and the
    /// origin halo (approached along `(delta, 0)`) are approachable; finite
    /// points with infinite angle are separated by the rectangle certificate.
    fn approachable(&self, a: &ExtendedPoint, _precision: &Precision) -> Truth {
        cover_approachable(a)
    }

    fn nearstandard(&self, a: &ExtendedPoint, _precision: &Precision) -> NearstandardVerdict {
        cover_nearstandard(a, SpaceId::Cover)
    }
}

impl MetricSpace for CoverCompletion {
    fn id(&self) -> SpaceId {
        SpaceId::CoverCompletion
    }

    fn basepoint(&self) -> ExtendedPoint {
        ExtendedPoint::origin()
    }

    fn metadata(&self) -> SpaceMeta {
        SpaceMeta { is_complete: true, completion_is_hb: false }
    }

    fn validate(&self, coords: &[LeviCivita]) -> Result<(), HullError> {
        if coords[0].is_exact_zero() {
            return Ok(());
        }
        Cover.validate(coords)
    }

    fn distance(&self, a: &ExtendedPoint, b: &ExtendedPoint, precision: &Precision) -> Result<LeviCivita, HullError> {
        Ok(completion_distance(&completion_point(a)?, &completion_point(b)?, precision)?)
    }

    fn approachable(&self, a: &ExtendedPoint, _precision: &Precision) -> Truth {
        if a.is_origin() {
            return Truth::True;
        }
        cover_approachable(a)
    }

    fn nearstandard(&self, a: &ExtendedPoint, _precision: &Precision) -> NearstandardVerdict {
        if a.is_origin() {
            return NearstandardVerdict::Near(ExtendedPoint::origin());
        }
        cover_nearstandard(a, SpaceId::CoverCompletion)
    }
}
