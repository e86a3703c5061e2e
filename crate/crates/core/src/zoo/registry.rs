//! Named catalogue of the constructed codes.
//!
//! Every code the toolkit can build by name is listed here with its
//! claimed invariants: length, size or dimension, minimum distance,
//! covering radius where established, the structural label claimed for
//! its automorphism group, and the bundled generator file used to verify
//! transitivity.  Thirteen entries carry a classification line number;
//! the rest are the comparison codes arising in the surrounding analysis
//! (duals, module extensions, quadratic-residue modules, the unital
//! code).  Group labels are metadata only: verification always runs on
//! the bundled generators, never on a name.
//!
//! The analysis routine computes whichever of (dimension, minimum
//! distance, covering radius, external distance) is feasible for the
//! code at hand: syndrome tables need redundancy at most 26, full-space
//! distance partitions need length at most 26, and enumeration needs
//! dimension at most 28.  External distance counts the nonzero indices
//! of the dual distribution, via the dual weight distribution for linear
//! codes and the MacWilliams transform of the inner distribution
//! otherwise.

use crate::code::Code;
use crate::dist::{dual_distribution, inner_distribution, macwilliams_dual_weights};
use crate::error::{Error, Result};
use crate::partition::{distance_partition, MAX_SPACE_LOG2};
use crate::regular::{CosetTable, MAX_SYNDROME_LOG2};
use crate::word::Word;
use crate::zoo::{golay, gqr, hadamard, menu, nr, unital};
use num::BigInt;
use num::Zero;

/// Claimed size of a code: a dimension for linear codes, a word count
/// otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeClaim {
    Dim(usize),
    Count(u128),
}

/// Claimed status of the related distance-regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClaim {
    /// A distance-regular coset graph exists (the classification cites one).
    Known,
    /// No graph arises in the usual manner.
    No,
    /// The classification defers the question to its graphs section.
    Deferred,
}

/// A constructible code with its claimed invariants.
pub struct NamedCode {
    /// ASCII identifier used by the command line and data files.
    pub name: &'static str,
    /// Human-readable name for tables.
    pub display: &'static str,
    /// Line number in the classification table, when the code appears there.
    pub table2_line: Option<u8>,
    pub m: usize,
    pub size: SizeClaim,
    /// Claimed minimum distance, when established.
    pub delta: Option<usize>,
    /// Claimed covering radius, when established.
    pub rho: Option<usize>,
    /// Claimed structural label for the automorphism group; never verified
    /// mechanically for m > 12, and reported as claimed metadata.
    pub aut_label: Option<&'static str>,
    /// Stem of the bundled generator file under data/groups, if any.
    pub group_file: Option<&'static str>,
    /// Whether verification should extend the file's generators by
    /// translations along a basis of the (linear) code.
    pub add_translations: bool,
    pub graph: Option<GraphClaim>,
}

/// Every named code, classification lines first.
pub const CATALOG: &[NamedCode] = &[
    NamedCode {
        name: "H",
        display: "H",
        table2_line: Some(1),
        m: 12,
        size: SizeClaim::Count(24),
        delta: Some(6),
        // The classification table prints 3, but the even-weight counting
        // bound, the Krawtchouk external distance 4, and the breadth-first
        // computation all give 4; see the repository notes.
        rho: Some(4),
        aut_label: Some("2.M12"),
        group_file: Some("AutH@12"),
        add_translations: false,
        graph: Some(GraphClaim::No),
    },
    NamedCode {
        name: "PH",
        display: "PH",
        table2_line: Some(2),
        m: 11,
        size: SizeClaim::Count(24),
        delta: Some(5),
        rho: Some(3),
        aut_label: Some("2:M11"),
        group_file: Some("AutPH@11"),
        add_translations: false,
        graph: Some(GraphClaim::No),
    },
    NamedCode {
        name: "NR15",
        display: "NR",
        table2_line: Some(3),
        m: 15,
        size: SizeClaim::Count(256),
        delta: Some(5),
        rho: Some(3),
        aut_label: Some("2^5:A8"),
        group_file: Some("AutNR@15"),
        add_translations: false,
        graph: Some(GraphClaim::Deferred),
    },
    NamedCode {
        name: "Pperp",
        display: "P^perp",
        table2_line: Some(4),
        m: 21,
        size: SizeClaim::Dim(12),
        delta: Some(5),
        rho: Some(3),
        aut_label: Some("T_C:PGammaL3(4)"),
        group_file: Some("PGammaL3(4)"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "LD1",
        display: "<L,D1>",
        table2_line: Some(5),
        m: 21,
        size: SizeClaim::Dim(11),
        delta: Some(5),
        rho: Some(6),
        aut_label: Some("T_C:PSigmaL3(4)"),
        group_file: Some("PSigmaL3(4)"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "LD1uLD2",
        display: "<L,D1>u<L,D2>",
        table2_line: Some(6),
        m: 21,
        size: SizeClaim::Count(3 << 10),
        delta: Some(5),
        rho: Some(6),
        aut_label: Some("T_L:PGammaL3(4)"),
        group_file: Some("AutLD1uLD2@21"),
        add_translations: false,
        graph: Some(GraphClaim::No),
    },
    NamedCode {
        name: "L",
        display: "L",
        table2_line: Some(7),
        m: 21,
        size: SizeClaim::Dim(10),
        delta: Some(5),
        rho: Some(6),
        aut_label: Some("T_C:PGammaL3(4)"),
        group_file: Some("PGammaL3(4)"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "G24",
        display: "G24",
        table2_line: Some(8),
        m: 24,
        size: SizeClaim::Dim(12),
        delta: Some(8),
        rho: Some(4),
        aut_label: Some("T_C:M24"),
        group_file: Some("M24"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "G23",
        display: "G23",
        table2_line: Some(9),
        m: 23,
        size: SizeClaim::Dim(12),
        delta: Some(7),
        rho: Some(3),
        aut_label: Some("T_C:M23"),
        group_file: Some("M23"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "G23perp",
        display: "G23^perp",
        table2_line: Some(10),
        m: 23,
        size: SizeClaim::Dim(11),
        delta: Some(8),
        rho: Some(7),
        aut_label: Some("T_C:M23"),
        group_file: Some("M23"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "G22",
        display: "G22",
        table2_line: Some(11),
        m: 22,
        size: SizeClaim::Dim(12),
        delta: Some(6),
        rho: Some(3),
        aut_label: Some("T_C:(M22:2)"),
        group_file: Some("M22:2"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "E22",
        display: "E22",
        table2_line: Some(12),
        m: 22,
        size: SizeClaim::Dim(11),
        delta: Some(6),
        rho: Some(7),
        aut_label: Some("T_C:(M22:2)"),
        group_file: Some("M22:2"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "S22",
        display: "S22",
        table2_line: Some(13),
        m: 22,
        size: SizeClaim::Dim(11),
        delta: Some(7),
        rho: Some(6),
        aut_label: Some("T_C:M22"),
        group_file: Some("M22"),
        add_translations: true,
        graph: Some(GraphClaim::Known),
    },
    NamedCode {
        name: "E11",
        display: "E",
        table2_line: None,
        m: 11,
        size: SizeClaim::Count(12),
        delta: Some(6),
        rho: None,
        aut_label: None,
        group_file: None,
        add_translations: false,
        graph: None,
    },
    NamedCode {
        name: "G22perp",
        display: "G22^perp",
        table2_line: None,
        m: 22,
        size: SizeClaim::Dim(10),
        delta: Some(8),
        rho: Some(7),
        aut_label: Some("T_C:(M22:2)"),
        group_file: Some("M22:2"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "S22twin",
        display: "S22 twin",
        table2_line: None,
        m: 22,
        size: SizeClaim::Dim(11),
        delta: Some(7),
        rho: Some(6),
        aut_label: Some("T_C:M22"),
        group_file: Some("M22"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "P",
        display: "P",
        table2_line: None,
        m: 21,
        size: SizeClaim::Dim(9),
        delta: Some(8),
        rho: Some(7),
        aut_label: Some("T_C:PGammaL3(4)"),
        group_file: Some("PGammaL3(4)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "Lperp",
        display: "L^perp",
        table2_line: None,
        m: 21,
        size: SizeClaim::Dim(11),
        delta: Some(6),
        rho: Some(5),
        aut_label: Some("T_C:PGammaL3(4)"),
        group_file: Some("PGammaL3(4)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "PD1",
        display: "<P,D1>",
        table2_line: None,
        m: 21,
        size: SizeClaim::Dim(10),
        delta: Some(6),
        rho: Some(7),
        aut_label: None,
        group_file: None,
        add_translations: false,
        graph: None,
    },
    NamedCode {
        name: "PPhi1",
        display: "<P,Phi1>",
        table2_line: None,
        m: 21,
        size: SizeClaim::Dim(10),
        delta: Some(7),
        rho: Some(6),
        aut_label: None,
        group_file: None,
        add_translations: false,
        graph: None,
    },
    NamedCode {
        name: "PPhi1perp",
        display: "<P,Phi1>^perp",
        table2_line: None,
        m: 21,
        size: SizeClaim::Dim(11),
        delta: Some(6),
        rho: Some(5),
        aut_label: None,
        group_file: None,
        add_translations: false,
        graph: None,
    },
    NamedCode {
        name: "PD2uPD3",
        display: "<P,D2>u<P,D3>",
        table2_line: None,
        m: 21,
        size: SizeClaim::Count(3 << 9),
        delta: Some(6),
        rho: Some(7),
        aut_label: Some("T_P:PGammaL3(4)"),
        group_file: Some("AutPD2uPD3@21"),
        add_translations: false,
        graph: None,
    },
    NamedCode {
        name: "U1-23",
        display: "U1(23)",
        table2_line: None,
        m: 24,
        size: SizeClaim::Dim(12),
        delta: Some(8),
        rho: Some(4),
        aut_label: Some("T_C:PSL2(23)"),
        group_file: Some("PSL2(23)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "U1-25",
        display: "U1(25)",
        table2_line: None,
        m: 26,
        size: SizeClaim::Dim(13),
        delta: None,
        rho: Some(5),
        aut_label: Some("T_C:PSL2(25)"),
        group_file: Some("PSL2(25)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "U1-31",
        display: "U1(31)",
        table2_line: None,
        m: 32,
        size: SizeClaim::Dim(16),
        delta: Some(8),
        rho: None,
        aut_label: Some("T_C:PSL2(31)"),
        group_file: Some("PSL2(31)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "U1-41",
        display: "U1(41)",
        table2_line: None,
        m: 42,
        size: SizeClaim::Dim(21),
        delta: Some(10),
        rho: None,
        aut_label: Some("T_C:PSL2(41)"),
        group_file: Some("PSL2(41)"),
        add_translations: true,
        graph: None,
    },
    NamedCode {
        name: "UnitalPerp",
        display: "U^perp (unital)",
        table2_line: None,
        m: 126,
        size: SizeClaim::Dim(21),
        delta: None,
        rho: None,
        aut_label: Some("T_C:PSU3(5)"),
        group_file: Some("PSU3(5)@126"),
        add_translations: true,
        graph: None,
    },
];

/// Look a name up in the catalogue.
pub fn entry(name: &str) -> Option<&'static NamedCode> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Build the code for a catalogue name.
pub fn build(name: &str) -> Result<Code> {
    match name {
        "H" => hadamard::hadamard12(),
        "PH" => hadamard::punctured_hadamard(),
        "E11" => hadamard::hadamard_even(),
        "NR15" => nr::nordstrom_robinson15(),
        "G24" => golay::golay24(),
        "G23" => golay::golay23(),
        "G23perp" => golay::golay23_dual(),
        "G22" => golay::golay22(),
        "G22perp" => golay::golay22_dual(),
        "E22" => golay::golay22_even(),
        "S22" => golay::golay22_mixed(),
        "S22twin" => golay::golay22_mixed_swapped(),
        "P" => menu::line_difference_code(),
        "L" => menu::line_span(),
        "Pperp" => menu::line_difference_dual(),
        "Lperp" => menu::line_span_dual(),
        "LD1" => menu::line_span_plus_hyperoval(),
        "PD1" => menu::differences_plus_hyperoval(),
        "PPhi1" => menu::differences_plus_subplane(),
        "PPhi1perp" => menu::differences_plus_subplane_dual(),
        "LD1uLD2" => menu::line_span_hyperoval_union(),
        "PD2uPD3" => menu::differences_hyperoval_union(),
        "U1-23" => Ok(gqr::quadratic_residue_module(23)?.code),
        "U1-25" => Ok(gqr::quadratic_residue_module(25)?.code),
        "U1-31" => Ok(gqr::quadratic_residue_module(31)?.code),
        "U1-41" => Ok(gqr::quadratic_residue_module(41)?.code),
        "UnitalPerp" => unital::HermitianUnital::new(5)?.block_span().dual(),
        other => Err(Error::Parse(format!("unknown code name {other:?}"))),
    }
}

/// Computed invariants of a code; fields are None when the computation is
/// out of reach for the code's size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeAnalysis {
    pub m: usize,
    pub size: u128,
    pub dim: Option<usize>,
    pub delta: Option<usize>,
    pub rho: Option<usize>,
    pub s: Option<usize>,
}

/// Compute length, size, minimum distance, covering radius, and external
/// distance, skipping whatever is infeasible.
pub fn analyze(code: &Code) -> Result<CodeAnalysis> {
    let m = code.len();
    let dim = code.dim();
    let delta = code.min_distance().ok();
    let rho = match dim {
        Some(k) if m - k <= MAX_SYNDROME_LOG2 => Some(CosetTable::new(code)?.covering_radius()),
        _ if m <= MAX_SPACE_LOG2 => Some(distance_partition(code)?.rho()),
        _ => None,
    };
    let s = external_distance(code)?;
    Ok(CodeAnalysis { m, size: code.size(), dim, delta, rho, s })
}

/// Number of nonzero indices of the dual distribution, or None when the
/// code is too large to enumerate.
pub fn external_distance(code: &Code) -> Result<Option<usize>> {
    let m = code.len();
    if code.is_linear() {
        let dim = code.dim().expect("linear code has a dimension");
        let dual_weights: Vec<BigInt> = if m - dim <= 28 {
            let dual = code.dual()?;
            match dual.weight_distribution() {
                Ok(wd) => wd.iter().map(|&c| BigInt::from(c)).collect(),
                Err(_) => return Ok(None),
            }
        } else {
            match code.weight_distribution() {
                Ok(wd) => {
                    let wd_big: Vec<BigInt> = wd.iter().map(|&c| BigInt::from(c)).collect();
                    macwilliams_dual_weights(m, &BigInt::from(code.size()), &wd_big)?
                }
                Err(_) => return Ok(None),
            }
        };
        return Ok(Some(dual_weights.iter().skip(1).filter(|c| !c.is_zero()).count()));
    }
    if code.size() > (1 << 13) {
        return Ok(None);
    }
    let inner = inner_distribution(code)?;
    let dual = dual_distribution(&inner)?;
    Ok(Some(dual.external_distance()))
}

/// Mismatches between an entry's claims and a computed analysis; empty
/// when every claim checked out.
pub fn claim_mismatches(e: &NamedCode, a: &CodeAnalysis) -> Vec<String> {
    let mut out = Vec::new();
    if e.m != a.m {
        out.push(format!("length {} != claimed {}", a.m, e.m));
    }
    match e.size {
        SizeClaim::Dim(k) => {
            if a.dim != Some(k) {
                out.push(format!("dimension {:?} != claimed {k}", a.dim));
            }
        }
        SizeClaim::Count(n) => {
            if a.size != n {
                out.push(format!("size {} != claimed {n}", a.size));
            }
        }
    }
    if let (Some(claim), Some(got)) = (e.delta, a.delta) {
        if claim != got {
            out.push(format!("minimum distance {got} != claimed {claim}"));
        }
    }
    if let (Some(claim), Some(got)) = (e.rho, a.rho) {
        if claim != got {
            out.push(format!("covering radius {got} != claimed {claim}"));
        }
    }
    out
}

/// Render a code as a text file: a header with the length and kind, then
/// one bitstring per line (basis rows for linear codes, all words
/// otherwise).
pub fn render_code(code: &Code) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!("m={}\n", code.len()));
    if let Some(basis) = code.basis() {
        out.push_str("kind=linear\n");
        for row in basis {
            out.push_str(&row.to_string());
            out.push('\n');
        }
    } else {
        out.push_str("kind=explicit\n");
        for w in code.enumerate()? {
            out.push_str(&w.to_string());
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parse the text format produced by `render_code`.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut m: Option<usize> = None;
    let mut kind: Option<bool> = None;
    let mut words: Vec<Word> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("m=") {
            m = Some(v.trim().parse().map_err(|_| {
                Error::Parse(format!("line {}: bad length {v:?}", lineno + 1))
            })?);
        } else if let Some(v) = line.strip_prefix("kind=") {
            kind = Some(match v.trim() {
                "linear" => true,
                "explicit" => false,
                other => {
                    return Err(Error::Parse(format!(
                        "line {}: unknown kind {other:?}",
                        lineno + 1
                    )))
                }
            });
        } else {
            words.push(line.parse()?);
        }
    }
    let m = m.ok_or_else(|| Error::Parse("missing m= header".into()))?;
    let linear = kind.ok_or_else(|| Error::Parse("missing kind= header".into()))?;
    if let Some(bad) = words.iter().find(|w| w.len() != m) {
        return Err(Error::Parse(format!(
            "word length {} does not match m={m}",
            bad.len()
        )));
    }
    if linear {
        Ok(Code::linear(m, &words))
    } else {
        Ok(Code::explicit(m, words))
    }
}
