//! The skew exterior algebra on t, u, v.
//!
//! Relations: t^2 = u^2 = v^2 = 0, t u = u t, t v = -v t, u v = -v u.
//! So t and u commute with each other while v anticommutes with both;
//! monomials are written in the canonical letter order t < u < v.

use std::fmt;

/// A letter of the skew exterior algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    T,
    U,
    V,
}

impl Letter {
    /// Internal weight inside the exterior algebra: |t| = |u| = 1, |v| = 2.
    pub fn exterior_weight(self) -> u32 {
        match self {
            Letter::T | Letter::U => 1,
            Letter::V => 2,
        }
    }
}

/// A basis monomial of the skew exterior algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WedgeMonomial {
    One,
    T,
    U,
    V,
    Tu,
    Tv,
    Uv,
    Tuv,
}

pub const ALL_WEDGES: [WedgeMonomial; 8] = [
    WedgeMonomial::One,
    WedgeMonomial::T,
    WedgeMonomial::U,
    WedgeMonomial::V,
    WedgeMonomial::Tu,
    WedgeMonomial::Tv,
    WedgeMonomial::Uv,
    WedgeMonomial::Tuv,
];

impl WedgeMonomial {
    pub fn letters(self) -> &'static [Letter] {
        use Letter::*;
        match self {
            WedgeMonomial::One => &[],
            WedgeMonomial::T => &[T],
            WedgeMonomial::U => &[U],
            WedgeMonomial::V => &[V],
            WedgeMonomial::Tu => &[T, U],
            WedgeMonomial::Tv => &[T, V],
            WedgeMonomial::Uv => &[U, V],
            WedgeMonomial::Tuv => &[T, U, V],
        }
    }

    fn from_sorted_letters(letters: &[Letter]) -> Self {
        use Letter::*;
        match letters {
            [] => WedgeMonomial::One,
            [T] => WedgeMonomial::T,
            [U] => WedgeMonomial::U,
            [V] => WedgeMonomial::V,
            [T, U] => WedgeMonomial::Tu,
            [T, V] => WedgeMonomial::Tv,
            [U, V] => WedgeMonomial::Uv,
            [T, U, V] => WedgeMonomial::Tuv,
            _ => unreachable!("letters not sorted or repeated"),
        }
    }

    /// Cohomological degree: the number of letters.
    pub fn degree(self) -> u8 {
        self.letters().len() as u8
    }

    /// Internal weight inside the exterior algebra (|t|=|u|=1, |v|=2).
    pub fn exterior_weight(self) -> u32 {
        self.letters().iter().map(|l| l.exterior_weight()).sum()
    }

    /// Contribution of this label to the weight of a cochain.
    ///
    /// The complex is graded by `weight(a) + weight_offset(label)` with the
    /// offsets below; the differential is then homogeneous, raising the
    /// weight by 2, 4, 2 out of degrees 0, 1, 2 respectively. The offsets
    /// are pinned so that the standard module generators sit at the usual
    /// weights: t (x) and u (y) duals at 1, the degree-2 labels t^v, u^v at
    /// 3 (the two defining relations of weight 3), the top label at 4, and
    /// the non-minimal pair v -> t^u at 0 and 4.
    pub fn weight_offset(self) -> u32 {
        match self {
            WedgeMonomial::One => 0,
            WedgeMonomial::T | WedgeMonomial::U => 1,
            WedgeMonomial::V => 0,
            WedgeMonomial::Tu => 4,
            WedgeMonomial::Tv | WedgeMonomial::Uv => 3,
            WedgeMonomial::Tuv => 4,
        }
    }

    /// The degree-i labels in canonical order.
    pub fn by_degree(i: u8) -> &'static [WedgeMonomial] {
        match i {
            0 => &ALL_WEDGES[0..1],
            1 => &ALL_WEDGES[1..4],
            2 => &ALL_WEDGES[4..7],
            3 => &ALL_WEDGES[7..8],
            _ => &[],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            WedgeMonomial::One => "1",
            WedgeMonomial::T => "t",
            WedgeMonomial::U => "u",
            WedgeMonomial::V => "v",
            WedgeMonomial::Tu => "t^u",
            WedgeMonomial::Tv => "t^v",
            WedgeMonomial::Uv => "u^v",
            WedgeMonomial::Tuv => "t^u^v",
        }
    }
}

impl fmt::Display for WedgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Product in the skew exterior algebra: `None` on a repeated letter,
/// otherwise the canonical monomial with its sign. Swapping t and u costs
/// nothing; any swap involving v flips the sign.
pub fn wedge(a: WedgeMonomial, b: WedgeMonomial) -> Option<(i64, WedgeMonomial)> {
    let mut letters: Vec<Letter> = a.letters().iter().chain(b.letters()).copied().collect();
    let mut sign = 1i64;
    // Insertion sort counting transposition signs.
    for i in 1..letters.len() {
        let mut j = i;
        while j > 0 && letters[j - 1] > letters[j] {
            sign *= swap_sign(letters[j - 1], letters[j]);
            letters.swap(j - 1, j);
            j -= 1;
        }
    }
    if letters.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, WedgeMonomial::from_sorted_letters(&letters)))
}

fn swap_sign(a: Letter, b: Letter) -> i64 {
    if a == Letter::V || b == Letter::V {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use WedgeMonomial::*;

    #[test]
    fn defining_signs() {
        assert_eq!(wedge(U, T), Some((1, Tu)));
        assert_eq!(wedge(V, T), Some((-1, Tv)));
        assert_eq!(wedge(T, T), None);
        assert_eq!(wedge(V, U), Some((-1, Uv)));
        assert_eq!(wedge(T, U), Some((1, Tu)));
    }

    #[test]
    fn triple_products() {
        assert_eq!(wedge(V, Tu), Some((1, Tuv)));
        assert_eq!(wedge(Tv, U), Some((-1, Tuv)));
        assert_eq!(wedge(Uv, T), Some((-1, Tuv)));
        assert_eq!(wedge(U, Tv), Some((1, Tuv)));
        assert_eq!(wedge(Tu, V), Some((1, Tuv)));
    }

    #[test]
    fn associative_on_letter_triples() {
        let letters = [T, U, V];
        for a in letters {
            for b in letters {
                for c in letters {
                    let left = wedge(a, b).and_then(|(s, ab)| wedge(ab, c).map(|(s2, m)| (s * s2, m)));
                    let right = wedge(b, c).and_then(|(s, bc)| wedge(a, bc).map(|(s2, m)| (s * s2, m)));
                    assert_eq!(left, right, "({a:?} {b:?}) {c:?}");
                }
            }
        }
    }

    #[test]
    fn commutation_signs() {
        for a in ALL_WEDGES {
            for b in ALL_WEDGES {
                let ab = wedge(a, b);
                let ba = wedge(b, a);
                match (ab, ba) {
                    (None, None) => {}
                    (Some((sa, m)), Some((sb, m2))) => {
                        assert_eq!(m, m2);
                        // single letters: t,u commute, v anticommutes with t,u
                        if a.degree() == 1 && b.degree() == 1 && a != b {
                            let expected = if a.exterior_weight() + b.exterior_weight() == 2 { 1 } else { -1 };
                            assert_eq!(sa * sb, expected, "{a:?} vs {b:?}");
                        }
                    }
                    _ => panic!("wedge defined asymmetrically for {a:?}, {b:?}"),
                }
            }
        }
    }

    #[test]
    fn degrees_and_weights() {
        let degrees: Vec<u8> = ALL_WEDGES.iter().map(|w| w.degree()).collect();
        assert_eq!(degrees, vec![0, 1, 1, 1, 2, 2, 2, 3]);
        let weights: Vec<u32> = ALL_WEDGES.iter().map(|w| w.exterior_weight()).collect();
        assert_eq!(weights, vec![0, 1, 1, 2, 2, 3, 3, 4]);
    }
}
