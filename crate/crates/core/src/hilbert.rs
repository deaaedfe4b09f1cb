//! Expected dimension series for the cohomology, derived from the module
//! decomposition rather than from linear algebra.
//!
//! Every summand is a free module over a polynomial subring of the center
//! on one generator, so each contributes `s^g / (1 - s^2)^k` where g is the
//! generator weight and k the number of free central variables:
//!
//! * degree 0: the center itself, k[x^2, y^2, z] -> 1/(1-s^2)^3
//! * degree 1: one generator of weight 2 over k[x^2, y^2], three of
//!   weight 2 over the full center
//! * degree 2: weight 6 over k[x^2, y^2]; weight 4 and twice weight 6 over
//!   the full center
//! * degree 3: a one-dimensional piece in weight 4 and a free generator of
//!   weight 6
//!
//! The homology sweep must reproduce these coefficients exactly.

/// One `s^gen_weight / (1 - s^2)^free_vars` summand.
#[derive(Debug, Clone, Copy)]
pub struct SeriesTerm {
    pub gen_weight: u32,
    pub free_vars: u32,
}

pub const DEGREE0: &[SeriesTerm] = &[SeriesTerm { gen_weight: 0, free_vars: 3 }];

pub const DEGREE1: &[SeriesTerm] = &[
    SeriesTerm { gen_weight: 2, free_vars: 2 },
    SeriesTerm { gen_weight: 2, free_vars: 3 },
    SeriesTerm { gen_weight: 2, free_vars: 3 },
    SeriesTerm { gen_weight: 2, free_vars: 3 },
];

pub const DEGREE2: &[SeriesTerm] = &[
    SeriesTerm { gen_weight: 6, free_vars: 2 },
    SeriesTerm { gen_weight: 4, free_vars: 3 },
    SeriesTerm { gen_weight: 6, free_vars: 3 },
    SeriesTerm { gen_weight: 6, free_vars: 3 },
];

pub const DEGREE3: &[SeriesTerm] = &[
    SeriesTerm { gen_weight: 4, free_vars: 0 },
    SeriesTerm { gen_weight: 6, free_vars: 3 },
];

fn binomial(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

impl SeriesTerm {
    /// Coefficient of s^w.
    pub fn coefficient(&self, w: u32) -> usize {
        if w < self.gen_weight || (w - self.gen_weight) % 2 != 0 {
            return 0;
        }
        let d = (w - self.gen_weight) / 2;
        if self.free_vars == 0 {
            return if d == 0 { 1 } else { 0 };
        }
        binomial(d + self.free_vars - 1, self.free_vars - 1)
    }
}

fn series_for(degree: u8) -> &'static [SeriesTerm] {
    match degree {
        0 => DEGREE0,
        1 => DEGREE1,
        2 => DEGREE2,
        3 => DEGREE3,
        _ => &[],
    }
}

/// Expected `dim HH^degree` at the given weight.
pub fn expected_hh_dim(degree: u8, w: u32) -> usize {
    series_for(degree).iter().map(|t| t.coefficient(w)).sum()
}

/// Expected dimension of the center in the given weight
/// (coefficient of s^w in 1/(1-s^2)^3).
pub fn expected_center_dim(w: u32) -> usize {
    expected_hh_dim(0, w)
}
