use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cover::CoverError;
use crate::lcf::expr::{evaluate, EvalError};
use crate::lcf::{format_number, LcError, LeviCivita, Precision, Truth};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("point belongs to {found}, expected {expected}")]
    SpaceMismatch { expected: SpaceId, found: SpaceId },
    #[error("{space} points have {expected} coordinates, got {found}")]
    Dimension { space: SpaceId, expected: usize, found: usize },
    #[error("invalid point: {0}")]
    Domain(String),
    #[error("representative is not in the galaxy of the basepoint")]
    NotFinite,
    #[error(transparent)]
    Lc(#[from] LcError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("unknown space '{0}'")]
    UnknownSpace(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceId {
    RationalsLine,
    EuclideanPlane,
    Cover,
    CoverCompletion,
}

impl SpaceId {
    pub const ALL: [SpaceId; 4] =
        [SpaceId::RationalsLine, SpaceId::EuclideanPlane, SpaceId::Cover, SpaceId::CoverCompletion];

    pub fn name(self) -> &'static str {
        match self {
            SpaceId::RationalsLine => "rationals-line",
            SpaceId::EuclideanPlane => "euclidean-plane",
            SpaceId::Cover => "cover",
            SpaceId::CoverCompletion => "cover-completion",
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            SpaceId::RationalsLine => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceId {
    type Err = HullError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SpaceId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| HullError::UnknownSpace(s.to_string()))
    }
}

/// A point of `*M` for one of the registered spaces. Construct through
/// [`ExtendedPoint::new`] so the coordinate count and domain are checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedPoint {
    space: SpaceId,
    coords: Vec<LeviCivita>,
}

impl ExtendedPoint {
    pub fn new(space: SpaceId, coords: Vec<LeviCivita>) -> Result<Self, HullError> {
        if coords.len() != space.dimension() {
            return Err(HullError::Dimension { space, expected: space.dimension(), found: coords.len() });
        }
        super::spaces::space(space).validate(&coords)?;
        Ok(Self { space, coords })
    }

    /// The completion's extra point; only meaningful for `cover-completion`.
    pub fn origin() -> Self {
        Self { space: SpaceId::CoverCompletion, coords: vec![LeviCivita::zero(), LeviCivita::zero()] }
    }

    pub(crate) fn new_unchecked(space: SpaceId, coords: Vec<LeviCivita>) -> Self {
        Self { space, coords }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn coords(&self) -> &[LeviCivita] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.space == SpaceId::CoverCompletion && self.coords[0].is_exact_zero()
    }

    /// Display with interval coefficients as decimals.
    pub fn display_decimal(&self, digits: u32) -> String {
        self.render(|x| format_number(x, Some(digits)))
    }

    fn render(&self, f: impl Fn(&LeviCivita) -> String) -> String {
        if self.is_origin() {
            return "origin".to_string();
        }
        if self.coords.len() == 1 {
            return f(&self.coords[0]);
        }
        let parts: Vec<String> = self.coords.iter().map(f).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|x| x.to_string()))
    }
}

/// A point of the hull, named by any representative of its halo.
#[derive(Clone, Debug)]
pub struct HaloRef {
    pub representative: ExtendedPoint,
}

impl HaloRef {
    pub fn new(representative: ExtendedPoint) -> Self {
        Self { representative }
    }

    /// Same halo iff the extended distance between representatives is infinitesimal.
    pub fn same_halo(&self, other: &HaloRef, precision: &Precision) -> Truth {
        let s = super::spaces::space(self.representative.space);
        match super::ops::extended_distance(s, &self.representative, &other.representative, precision) {
            Ok(d) => d.halo_equal(&LeviCivita::zero()),
            Err(_) => Truth::Unknown,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceMeta {
    pub is_complete: bool,
    pub completion_is_hb: bool,
}

/// Outcome of a nearstandard query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NearstandardVerdict {
    /// Infinitely close to this standard point (coordinates may be enclosures).
    Near(ExtendedPoint),
    Not,
    Unknown,
}

impl NearstandardVerdict {
    pub fn point(&self) -> Option<&ExtendedPoint> {
        match self {
            NearstandardVerdict::Near(p) => Some(p),
            _ => None,
        }
    }

    pub fn truth(&self) -> Truth {
        match self {
            NearstandardVerdict::Near(_) => Truth::True,
            NearstandardVerdict::Not => Truth::False,
            NearstandardVerdict::Unknown => Truth::Unknown,
        }
    }
}

/// A standard metric space together with its nonstandard extension.
///
/// Approachability has no generic decision procedure, so each space brings
/// its own oracle; a `True`/`False` answer must be justified by the
/// space's structure, anything else is `Unknown`.
pub trait MetricSpace: Send + Sync {
    fn id(&self) -> SpaceId;
    fn basepoint(&self) -> ExtendedPoint;
    fn metadata(&self) -> SpaceMeta;
    /// Domain constraints on already dimension-checked coordinates.
    fn validate(&self, coords: &[LeviCivita]) -> Result<(), HullError>;
    fn distance(&self, a: &ExtendedPoint, b: &ExtendedPoint, precision: &Precision) -> Result<LeviCivita, HullError>;
    fn approachable(&self, a: &ExtendedPoint, precision: &Precision) -> Truth;
    fn nearstandard(&self, a: &ExtendedPoint, precision: &Precision) -> NearstandardVerdict;

    fn dimension(&self) -> usize {
        self.id().dimension()
    }
}

/// Splits `"(a, b)"` into its top-level components; a bare expression is one component.
fn split_coordinates(src: &str) -> Vec<&str> {
    let s = src.trim();
    let inner = if s.starts_with('(') && closing_paren(s) == Some(s.len() - 1) { &s[1..s.len() - 1] } else { s };
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].trim());
    parts
}

fn closing_paren(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Parses `"(EXPR, EXPR)"` (or a single `EXPR` on the line) for `space`.
/// `cover-completion` also accepts `origin`.
pub fn parse_point(space: SpaceId, src: &str, precision: &Precision) -> Result<ExtendedPoint, HullError> {
    if space == SpaceId::CoverCompletion && src.trim() == "origin" {
        return Ok(ExtendedPoint::origin());
    }
    let coords =
        split_coordinates(src).into_iter().map(|part| evaluate(part, precision)).collect::<Result<Vec<_>, _>>()?;
    ExtendedPoint::new(space, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcf::parse_number;

    #[test]
    fn splits_on_top_level_commas() {
        assert_eq!(split_coordinates("(1, t^-1)"), vec!["1", "t^-1"]);
        assert_eq!(split_coordinates("([1, 2], (1+t)*2)"), vec!["[1, 2]", "(1+t)*2"]);
        assert_eq!(split_coordinates("(1+t)*(2)"), vec!["(1+t)*(2)"]);
        assert_eq!(split_coordinates("3"), vec!["3"]);
    }

    #[test]
    fn parses_points() {
        let p = Precision::default();
        let c = parse_point(SpaceId::Cover, "(1, t^-1)", &p).unwrap();
        assert_eq!(c.coords()[1], parse_number("t^-1").unwrap());
        assert_eq!(c.to_string(), "(1, t^-1)");
        assert!(parse_point(SpaceId::CoverCompletion, "origin", &p).unwrap().is_origin());
        assert_eq!(parse_point(SpaceId::RationalsLine, "1 + t", &p).unwrap().to_string(), "1 + t");
        assert!(matches!(parse_point(SpaceId::Cover, "(0, 1)", &p), Err(HullError::Domain(_))));
        assert!(matches!(parse_point(SpaceId::Cover, "(1)", &p), Err(HullError::Dimension { .. })));
        assert!(matches!(parse_point(SpaceId::Cover, "(1, +)", &p), Err(HullError::Eval(_))));
        assert!("plane".parse::<SpaceId>().is_err());
        assert_eq!("cover-completion".parse::<SpaceId>().unwrap(), SpaceId::CoverCompletion);
    }
}
