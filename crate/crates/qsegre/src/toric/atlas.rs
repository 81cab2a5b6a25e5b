//! The 2^m coordinate charts of (CP¹)^m and the vertex–index dictionary.
//!
//! With `z_s = α^s_1 / α^s_0`, each chart of the product of projective lines
//! picks, per position, either `z_s` or `z_s⁻¹`. The chart list is indexed
//! like the hypercube: chart rank `r` inverts exactly the coordinates whose
//! bit is set in `r`, so chart 1 is `(z_1, …, z_m)` and chart `2^m` is
//! `(z_1⁻¹, …, z_m⁻¹)`.

use crate::error::{Error, Result};
use crate::state::{MultiIndex, MAX_QUBITS};

/// One coordinate chart: a sign per position, `+1` for `z_s` and `−1` for
/// the inverted coordinate `z_s⁻¹`. Slot `s − 1` holds position `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    signs: Vec<i64>,
}

impl Chart {
    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    /// Whether coordinate `z_s` appears inverted in this chart.
    pub fn inverts(&self, s: usize) -> Result<bool> {
        if s == 0 || s > self.signs.len() {
            return Err(Error::PositionOutOfRange {
                position: s,
                m: self.signs.len(),
            });
        }
        Ok(self.signs[s - 1] < 0)
    }
}

impl std::fmt::Display for Chart {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, sign) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *sign < 0 {
                write!(f, "z_{}^-1", i + 1)?;
            } else {
                write!(f, "z_{}", i + 1)?;
            }
        }
        write!(f, ")")
    }
}

/// The `2^m` sign-pattern charts covering (CP¹)^m, in rank order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartAtlas {
    m: usize,
    charts: Vec<Chart>,
}

impl ChartAtlas {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }
}

/// Builds the chart atlas for `m` projective lines.
pub fn hypercube_atlas(m: usize) -> Result<ChartAtlas> {
    if m == 0 {
        return Err(Error::ZeroQubits);
    }
    if m > MAX_QUBITS {
        return Err(Error::TooManyQubits { m, max: MAX_QUBITS });
    }
    let charts = (0..1usize << m)
        .map(|rank| Chart {
            signs: (0..m)
                .map(|s| if (rank >> s) & 1 == 1 { -1 } else { 1 })
                .collect(),
        })
        .collect();
    Ok(ChartAtlas { m, charts })
}

/// The bijection between hypercube vertices `ε ∈ {±1}^m` and amplitude
/// multi-indices, via `i_s = (1 + ε_s) / 2`: sign `+1` maps to digit 1
/// because `z_s = α^s_1 / α^s_0` carries exponent `+1` on the `α^s_1` slot.
/// Slot `s − 1` of a vertex vector holds position `s`.
#[derive(Clone, Copy, Debug)]
pub struct VertexExponentMap {
    m: usize,
}

impl VertexExponentMap {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroQubits);
        }
        if m > MAX_QUBITS {
            return Err(Error::TooManyQubits { m, max: MAX_QUBITS });
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Index whose digit at position `s` is `(1 + ε_s) / 2`.
    pub fn index_for_vertex(&self, vertex: &[i64]) -> Result<MultiIndex> {
        if vertex.len() != self.m {
            return Err(Error::ConeDimensionMismatch {
                expected: self.m,
                got: vertex.len(),
            });
        }
        let mut rank = 0usize;
        for (slot, &sign) in vertex.iter().enumerate() {
            match sign {
                1 => rank |= 1 << slot,
                -1 => {}
                _ => return Err(Error::InvalidSign),
            }
        }
        MultiIndex::new(self.m, rank)
    }

    /// Vertex with `ε_s = 2·i_s − 1`.
    pub fn vertex_for_index(&self, index: MultiIndex) -> Result<Vec<i64>> {
        if index.m() != self.m {
            return Err(Error::IndexLengthMismatch {
                index: index.to_string(),
                got: index.m(),
                expected: self.m,
            });
        }
        (1..=self.m)
            .map(|s| Ok(if index.bit(s)? == 1 { 1 } else { -1 }))
            .collect()
    }

    /// All `(vertex, index)` pairs in index-rank order.
    pub fn entries(&self) -> Result<Vec<(Vec<i64>, MultiIndex)>> {
        (0..1usize << self.m)
            .map(|rank| {
                let index = MultiIndex::new(self.m, rank)?;
                Ok((self.vertex_for_index(index)?, index))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn single_line_has_plain_and_inverted_chart() {
        let atlas = hypercube_atlas(1).unwrap();
        assert_eq!(atlas.charts().len(), 2);
        assert_eq!(atlas.charts()[0].to_string(), "(z_1)");
        assert_eq!(atlas.charts()[1].to_string(), "(z_1^-1)");
    }

    #[test]
    fn two_lines_have_four_charts() {
        assert_eq!(hypercube_atlas(2).unwrap().charts().len(), 4);
    }

    #[test]
    fn last_chart_inverts_everything() {
        let atlas = hypercube_atlas(3).unwrap();
        assert_eq!(atlas.charts().len(), 8);
        let last = &atlas.charts()[7];
        for s in 1..=3 {
            assert!(last.inverts(s).unwrap());
        }
        let first = &atlas.charts()[0];
        for s in 1..=3 {
            assert!(!first.inverts(s).unwrap());
        }
    }

    #[test]
    fn atlas_covers_every_sign_pattern() {
        for m in 1..=4 {
            let atlas = hypercube_atlas(m).unwrap();
            let patterns: BTreeSet<Vec<i64>> =
                atlas.charts().iter().map(|c| c.signs().to_vec()).collect();
            assert_eq!(patterns.len(), 1 << m);
            assert!(patterns
                .iter()
                .all(|p| p.len() == m && p.iter().all(|&s| s == 1 || s == -1)));
        }
    }

    #[test]
    fn vertex_index_bijection_round_trips() {
        for m in 1..=4 {
            let map = VertexExponentMap::new(m).unwrap();
            let mut seen = BTreeSet::new();
            for (vertex, index) in map.entries().unwrap() {
                assert_eq!(map.index_for_vertex(&vertex).unwrap(), index);
                assert!(seen.insert(vertex));
            }
            assert_eq!(seen.len(), 1 << m);
        }
    }

    #[test]
    fn plus_sign_maps_to_digit_one() {
        let map = VertexExponentMap::new(3).unwrap();
        // vertex slots hold positions s = 1, 2, 3; all +1 is index 111
        let all_plus = map.index_for_vertex(&[1, 1, 1]).unwrap();
        assert_eq!(all_plus.to_string(), "111");
        let mixed = map.index_for_vertex(&[-1, 1, -1]).unwrap();
        // ε_1 = −1, ε_2 = +1, ε_3 = −1 → x_3 x_2 x_1 = 010
        assert_eq!(mixed.to_string(), "010");
        assert!(map.index_for_vertex(&[0, 1, 1]).is_err());
    }
}
