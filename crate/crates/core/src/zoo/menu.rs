//! The family of length-21 codes between the even-line code and its dual.
//!
//! The span P of pairwise differences of lines of the projective plane of
//! order four is a [21, 9, 8] code whose dual has dimension 12, and the
//! interval between them is controlled by the quotient space of dimension
//! three: the seven nonzero cosets are anchored by the lines, the three
//! hyperoval classes and the three Baer-subplane classes.  This module
//! names every code in that interval the classification cares about:
//!
//! * P itself and the line span L = P extended by one line;
//! * the duals of both;
//! * P or L extended by a hyperoval, and P extended by a subplane;
//! * the two nonlinear unions: L extended by each of two hyperoval classes
//!   (a (21, 3072, 5) code) and P extended by each of two hyperoval
//!   classes (a (21, 1536, 6) code).
//!
//! It also provides the weight-6 witness report used to separate orbits on
//! weight-3 vertices: if every weight-6 codeword is a hyperoval, then no
//! codeword splits into a triangle and a collinear triple, so a group
//! preserving the code can never map one kind of weight-3 vertex to the
//! other and the distance-3 cell falls into at least two orbits.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::geometry::modules::{CosetAnchor, PlaneModules};
use crate::geometry::ovals::OvalClasses;
use crate::geometry::plane::{Plane, N_POINTS};
use crate::word::Word;

fn check(code: Code, dim: usize, delta: usize, what: &str) -> Result<Code> {
    if code.dim() != Some(dim) || code.min_distance()? != delta {
        return Err(Error::Construction(format!(
            "{what}: expected [21, {dim}, {delta}], got [21, {}, {}]",
            code.dim().unwrap_or(0),
            code.min_distance()?
        )));
    }
    Ok(code)
}

/// The [21, 9, 8] span of differences of lines.
pub fn line_difference_code() -> Result<Code> {
    check(PlaneModules::new().even_lines, 9, 8, "line difference code")
}

/// The [21, 10, 5] span of the lines.
pub fn line_span() -> Result<Code> {
    check(PlaneModules::new().line_code, 10, 5, "line span")
}

/// The [21, 12, 5] dual of the line difference code.
pub fn line_difference_dual() -> Result<Code> {
    check(PlaneModules::new().even_lines_dual, 12, 5, "dual of the line difference code")
}

/// The [21, 11, 6] dual of the line span.
pub fn line_span_dual() -> Result<Code> {
    check(PlaneModules::new().line_code_dual, 11, 6, "dual of the line span")
}

/// The [21, 11, 5] line span extended by a hyperoval of the first class.
pub fn line_span_plus_hyperoval() -> Result<Code> {
    let modules = PlaneModules::new();
    check(
        modules.adjoin(&[CosetAnchor::Line, CosetAnchor::Hyperoval(1)]),
        11,
        5,
        "line span plus hyperoval",
    )
}

/// The [21, 10, 6] line difference code extended by a hyperoval of the
/// first class; the dual of `line_span_plus_hyperoval`.
pub fn differences_plus_hyperoval() -> Result<Code> {
    let modules = PlaneModules::new();
    check(modules.adjoin(&[CosetAnchor::Hyperoval(1)]), 10, 6, "differences plus hyperoval")
}

/// The [21, 10, 7] line difference code extended by a subplane of the
/// first class.
pub fn differences_plus_subplane() -> Result<Code> {
    let modules = PlaneModules::new();
    check(modules.adjoin(&[CosetAnchor::Fano(1)]), 10, 7, "differences plus subplane")
}

/// The [21, 11, 6] dual of `differences_plus_subplane`.
pub fn differences_plus_subplane_dual() -> Result<Code> {
    check(differences_plus_subplane()?.dual()?, 11, 6, "dual of differences plus subplane")
}

/// The nonlinear (21, 3072, 5) union of the line span extended by each of
/// the first two hyperoval classes.
pub fn line_span_hyperoval_union() -> Result<Code> {
    let modules = PlaneModules::new();
    let a = modules.adjoin(&[CosetAnchor::Line, CosetAnchor::Hyperoval(1)]);
    let b = modules.adjoin(&[CosetAnchor::Line, CosetAnchor::Hyperoval(2)]);
    union_of(a, b, 3072, 5, "union of line-span extensions")
}

/// The nonlinear (21, 1536, 6) union of the line difference code extended
/// by each of the last two hyperoval classes.
pub fn differences_hyperoval_union() -> Result<Code> {
    let modules = PlaneModules::new();
    let a = modules.adjoin(&[CosetAnchor::Hyperoval(2)]);
    let b = modules.adjoin(&[CosetAnchor::Hyperoval(3)]);
    union_of(a, b, 1536, 6, "union of line-difference extensions")
}

fn union_of(a: Code, b: Code, size: u128, delta: usize, what: &str) -> Result<Code> {
    let mut words = a.enumerate()?;
    words.extend(b.enumerate()?);
    let code = Code::explicit(N_POINTS, words);
    if code.size() != size || code.min_distance()? != delta {
        return Err(Error::Construction(format!(
            "{what}: expected ({size}, {delta}), got ({}, {})",
            code.size(),
            code.min_distance()?
        )));
    }
    Ok(code)
}

/// What the weight-6 codewords of a length-21 code look like relative to
/// the plane.
pub struct Weight6Witness {
    /// Number of weight-6 codewords.
    pub total: usize,
    /// How many fall in each hyperoval class, indexed by class - 1.
    pub by_class: [usize; 3],
    /// A weight-6 codeword containing three collinear points, if any.
    pub collinear_offender: Option<Word>,
    /// A weight-6 codeword that is not a hyperoval, if any.
    pub non_hyperoval: Option<Word>,
}

impl Weight6Witness {
    /// True when every weight-6 codeword is a hyperoval, hence free of
    /// collinear triples.
    pub fn all_hyperovals(&self) -> bool {
        self.non_hyperoval.is_none() && self.collinear_offender.is_none()
    }
}

/// Classify every weight-6 codeword of a length-21 code.
pub fn weight6_witness(code: &Code) -> Result<Weight6Witness> {
    if code.len() != N_POINTS {
        return Err(Error::LengthMismatch(code.len(), N_POINTS));
    }
    let plane = Plane::new();
    let ovals = OvalClasses::new(&plane);
    let mut witness = Weight6Witness {
        total: 0,
        by_class: [0; 3],
        collinear_offender: None,
        non_hyperoval: None,
    };
    code.for_each_word(|w| {
        if w.weight() != 6 {
            return;
        }
        witness.total += 1;
        match ovals.hyperoval_class_of(w) {
            Some(class) => witness.by_class[class as usize - 1] += 1,
            None => witness.non_hyperoval = Some(*w),
        }
        let support = w.support();
        'triples: for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    if plane.collinear(support[i], support[j], support[k]) {
                        witness.collinear_offender = Some(*w);
                        break 'triples;
                    }
                }
            }
        }
    })?;
    Ok(witness)
}
