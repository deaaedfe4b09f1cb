//! The stated multiplication tables, stored as data so every expectation
//! is auditable in one place.
//!
//! Entries mirror the source tables symbol for symbol. Where exact
//! computation refutes a stated entry, the correction lives in the errata
//! registry next to it, together with the reasoning; verification reports
//! the stated residual and the corrected identity side by side, never
//! silently swapping one for the other.

use crate::homology::GeneratorName;
use crate::ncpoly::{AlgebraElement, CenterMonomial};
use crate::scalar::FieldSpec;

/// A central coefficient k * (x^2)^e1 (y^2)^e2 z^e3.
pub fn central(field: FieldSpec, k: i64, e1: u32, e2: u32, e3: u32) -> AlgebraElement {
    AlgebraElement::monomial(CenterMonomial::new(e1, e2, e3).to_pbw(), field.integer(k))
}

/// One expected product: left * right = sum of (class, central coefficient).
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub id: &'static str,
    pub location: &'static str,
    pub left: GeneratorName,
    pub right: GeneratorName,
    pub expected: Vec<(GeneratorName, AlgebraElement)>,
    pub note: Option<&'static str>,
}

/// A documented correction to a stated table entry.
#[derive(Debug, Clone)]
pub struct Erratum {
    pub corrected: Vec<(GeneratorName, AlgebraElement)>,
    pub note: &'static str,
}

use GeneratorName::*;

/// The squares stated to vanish.
pub fn square_entries(_field: FieldSpec) -> Vec<TableEntry> {
    const LOC: &str = "degree-1 square relations";
    [M0, M1, TauY, MuX]
        .into_iter()
        .map(|g| TableEntry {
            id: match g {
                M0 => "m0*m0",
                M1 => "m1*m1",
                TauY => "tau_y*tau_y",
                MuX => "mu_x*mu_x",
                _ => unreachable!(),
            },
            location: LOC,
            left: g,
            right: g,
            expected: Vec::new(),
            note: None,
        })
        .collect()
}

/// The degree-1 by degree-1 product table.
pub fn hh1_hh1_table(field: FieldSpec) -> Vec<TableEntry> {
    const LOC: &str = "HH1*HH1 multiplication table";
    vec![
        TableEntry {
            id: "m0*m1",
            location: LOC,
            left: M0,
            right: M1,
            expected: vec![(Nu0, central(field, 2, 0, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "m0*tau_y",
            location: LOC,
            left: M0,
            right: TauY,
            expected: vec![(Nu1, central(field, -2, 0, 1, 0))],
            note: None,
        },
        TableEntry {
            id: "m0*mu_x",
            location: LOC,
            left: M0,
            right: MuX,
            expected: vec![(Nu1, central(field, -2, 1, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "m1*tau_y",
            location: LOC,
            left: M1,
            right: TauY,
            expected: vec![
                (Nu1, central(field, 2, 0, 1, 0)),
                (Nu2, central(field, -2, 0, 0, 0)),
            ],
            note: None,
        },
        TableEntry {
            id: "m1*mu_x",
            location: LOC,
            left: M1,
            right: MuX,
            expected: vec![
                (Nu1, central(field, -2, 1, 0, 0)),
                (Nu3, central(field, -2, 0, 0, 0)),
            ],
            note: None,
        },
        TableEntry {
            id: "tau_y*mu_x",
            location: LOC,
            left: TauY,
            right: MuX,
            expected: vec![(Nu1, central(field, -1, 0, 0, 1))],
            note: None,
        },
    ]
}

/// The degree-1 by degree-2 product table.
pub fn hh1_hh2_table(field: FieldSpec) -> Vec<TableEntry> {
    const LOC: &str = "HH1*HH2 multiplication table";
    let zero = Vec::new;
    vec![
        TableEntry {
            id: "m0*nu0",
            location: LOC,
            left: M0,
            right: Nu0,
            expected: zero(),
            note: Some("source writes v_0 for nu_0; read as nu_0"),
        },
        TableEntry {
            id: "m1*nu0",
            location: LOC,
            left: M1,
            right: Nu0,
            expected: zero(),
            note: None,
        },
        TableEntry {
            id: "tau_y*nu0",
            location: LOC,
            left: TauY,
            right: Nu0,
            expected: vec![(Qxy, central(field, 1, 0, 1, 0))],
            note: None,
        },
        TableEntry {
            id: "mu_x*nu0",
            location: LOC,
            left: MuX,
            right: Nu0,
            expected: vec![(Qxy, central(field, -1, 1, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "m0*nu1",
            location: LOC,
            left: M0,
            right: Nu1,
            expected: zero(),
            note: None,
        },
        TableEntry {
            id: "m1*nu1",
            location: LOC,
            left: M1,
            right: Nu1,
            expected: vec![(Qxy, central(field, -2, 0, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "tau_y*nu1",
            location: LOC,
            left: TauY,
            right: Nu1,
            expected: zero(),
            note: None,
        },
        TableEntry {
            id: "mu_x*nu1",
            location: LOC,
            left: MuX,
            right: Nu1,
            expected: zero(),
            note: None,
        },
        TableEntry {
            id: "m0*nu2",
            location: LOC,
            left: M0,
            right: Nu2,
            expected: vec![(Qxy, central(field, 2, 0, 1, 0))],
            note: None,
        },
        TableEntry {
            id: "m1*nu2",
            location: LOC,
            left: M1,
            right: Nu2,
            expected: vec![(Qxy, central(field, -2, 0, 1, 0))],
            note: None,
        },
        TableEntry {
            id: "tau_y*nu2",
            location: LOC,
            left: TauY,
            right: Nu2,
            expected: zero(),
            note: None,
        },
        TableEntry {
            id: "mu_x*nu2",
            location: LOC,
            left: MuX,
            right: Nu2,
            expected: vec![(Qxy, central(field, -1, 0, 0, 1))],
            note: None,
        },
        TableEntry {
            id: "m0*nu3",
            location: LOC,
            left: M0,
            right: Nu3,
            expected: vec![(Qxy, central(field, 2, 1, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "m1*nu3",
            location: LOC,
            left: M1,
            right: Nu3,
            expected: vec![(Qxy, central(field, 2, 1, 0, 0))],
            note: None,
        },
        TableEntry {
            id: "tau_y*nu3",
            location: LOC,
            left: TauY,
            right: Nu3,
            expected: vec![(Qxy, central(field, 1, 0, 0, 1))],
            note: None,
        },
        TableEntry {
            id: "mu_x*nu3",
            location: LOC,
            left: MuX,
            right: Nu3,
            expected: zero(),
            note: None,
        },
    ]
}

/// All table entries in verification order.
pub fn all_entries(field: FieldSpec) -> Vec<TableEntry> {
    let mut v = square_entries(field);
    v.extend(hh1_hh1_table(field));
    v.extend(hh1_hh2_table(field));
    v
}

/// Documented corrections, keyed by entry id.
///
/// Both were found by exact reduction; neither is a transcription choice
/// on our side. The cross-checks quoted in the notes use only table
/// entries that verify as stated.
pub fn erratum_for(id: &str, field: FieldSpec) -> Option<Erratum> {
    match id {
        "m0*m1" => Some(Erratum {
            corrected: vec![(Nu0, central(field, -4, 0, 0, 0))],
            note: "exact reduction gives m0*m1 = -4 nu0; the stated coefficient 2 is \
                   inconsistent with associativity: (m0*m1)*tau_y must equal \
                   m0*(m1*tau_y) = -4 y^2 qxy by the verified entries m0*nu1, m0*nu2, \
                   tau_y*nu0, m1*tau_y, but 2 nu0 * tau_y = 2 y^2 qxy",
        }),
        "mu_x*nu0" => Some(Erratum {
            corrected: vec![(Qxy, central(field, 1, 1, 0, 0))],
            note: "exact reduction gives mu_x*nu0 = + x^2 qxy (it is the literal cochain \
                   t^u^v # (x^3*y)); the x<->y, t<->u symmetry of the complex carries the \
                   verified entry tau_y*nu0 = y^2 qxy to exactly this sign",
        }),
        _ => None,
    }
}
