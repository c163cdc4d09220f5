use std::fmt;

use serde::Serialize;

use crate::exact::{q, Rational};

use super::block::BlockKind;

/// How `W(n, m)` is matched with the Peter–Weyl blocks `E_{l,r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Labeling {
    /// `W(n, m) = ⊕_K E_{K,n}`: the combined spin is the left index.
    CombinedLeft,
    /// `W(n, m) = ⊕_K E_{n,K}`.
    CombinedRight,
}

impl Labeling {
    pub fn describe(self) -> &'static str {
        match self {
            Labeling::CombinedLeft => "E_{K,n}",
            Labeling::CombinedRight => "E_{n,K}",
        }
    }
}

/// Peter–Weyl block `E_{l,r}`, of dimension `(l+1)(r+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PeterWeyl {
    pub l: u32,
    pub r: u32,
}

impl PeterWeyl {
    pub fn dim(&self) -> usize {
        (self.l as usize + 1) * (self.r as usize + 1)
    }
}

impl fmt::Display for PeterWeyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{},{}}}", self.l, self.r)
    }
}

/// Blocks inside `W(n, m)`: combined spin `K` from `|n-m|` to `n+m` in steps of two.
pub fn blocks_of(m: u32, n: u32, labeling: Labeling) -> Vec<PeterWeyl> {
    (m.abs_diff(n)..=m + n)
        .step_by(2)
        .map(|k| match labeling {
            Labeling::CombinedLeft => PeterWeyl { l: k, r: n },
            Labeling::CombinedRight => PeterWeyl { l: n, r: k },
        })
        .collect()
}

/// Parameters `(s, k, sign)` placing `E_{l,r}` in the closed-form families.
///
/// Odd `m = 2p+1`: `E_{k+2s+1,k}` carries `+`, `E_{k,k+2s+1}` carries `-`.
/// Even `m = 2p`: `E_{k+2s,k}` carries `+`, `E_{k,k+2s}` carries `-`.
fn family(m: u32, b: PeterWeyl) -> (i64, i64, i64) {
    let (l, r) = (b.l as i64, b.r as i64);
    let gap = (l - r).abs() - if m % 2 == 1 { 1 } else { 0 };
    let s = gap / 2;
    if l >= r {
        (s, r, 1)
    } else {
        (s, l, -1)
    }
}

/// Eigenvalue of `kind` on the spin-`m` part of `E_{l,r}`, or `None` for the
/// non-square first-order kinds.
pub fn closed_form(kind: BlockKind, m: u32, b: PeterWeyl) -> Option<Rational> {
    let (s, k, sign) = family(m, b);
    let odd = m % 2 == 1;
    let p = if odd { (m as i64 - 1) / 2 } else { m as i64 / 2 };
    let z = |v: i64| q(v, 1);
    let d0 = if odd {
        // ±(2s+1)(k + (2s+3)/2)
        q(sign * (2 * s + 1) * (2 * k + 2 * s + 3), 2)
    } else {
        z(sign * 2 * s * (k + s + 1))
    };
    let (pm, mp) = if odd {
        (
            4 * (p - s) * (k + 1 - (p - s)) * (p + s + 1) * (k + p + s + 2),
            4 * (p - s + 1) * (k - (p - s)) * (p + s + 2) * (k + p + s + 3),
        )
    } else {
        (
            4 * (p - s) * (k + 1 - (p - s)) * (p + s) * (k + p + s + 1),
            4 * (p - s + 1) * (k - (p - s)) * (p + s + 1) * (k + p + s + 2),
        )
    };
    Some(match kind {
        BlockKind::D0 => d0,
        BlockKind::DplusDminus => z(pm),
        BlockKind::DminusDplus => z(mp),
        BlockKind::Lap => &(&d0 * &d0) + &z(pm),
        BlockKind::LapTilde => &(&d0 * &d0) + &z(mp),
        BlockKind::ZSquaredSum => return None,
        BlockKind::Dplus | BlockKind::Dminus => return None,
    })
}

/// `Σ Z_i² = -n(n+2)` on every block of `W(n, m)`.
pub fn z_squared_value(n: u32) -> Rational {
    q(-(n as i64) * (n as i64 + 2), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_degree_one() {
        let bl = blocks_of(1, 1, Labeling::CombinedLeft);
        let vals: Vec<_> = bl.iter().map(|b| (closed_form(BlockKind::D0, 1, *b).unwrap().to_string(), b.dim())).collect();
        assert_eq!(vals, vec![("-3/2".to_string(), 2), ("5/2".to_string(), 6)]);
    }

    #[test]
    fn spin_one_degree_zero() {
        let bl = blocks_of(2, 0, Labeling::CombinedLeft);
        assert_eq!(bl, vec![PeterWeyl { l: 2, r: 0 }]);
        assert_eq!(closed_form(BlockKind::D0, 2, bl[0]).unwrap(), q(4, 1));
    }

    #[test]
    fn trivial_bundle_laplacian() {
        for n in 0..5 {
            let b = PeterWeyl { l: n, r: n };
            assert_eq!(closed_form(BlockKind::DminusDplus, 0, b).unwrap(), q(4 * n as i64 * (n as i64 + 2), 1));
            assert!(closed_form(BlockKind::Lap, 0, b).unwrap().is_zero());
        }
    }
}
