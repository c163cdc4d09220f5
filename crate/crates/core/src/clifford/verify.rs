use rayon::prelude::*;
use serde_json::json;

use crate::exact::{gram_adjoint, q, Matrix, Rational, Scalar};
use crate::report::{residual_witness, CheckEntry, VerificationReport};
use crate::su2::{cg_decompose, gram_matrix, rep_dim, rep_group, tensor_gram, GroupElement, GroupError, LieVector};

use super::maps::{clifford_generator, clifford_matrix, CliffordKind};

const ADJOINT: &str = "clifford adjointness";
const INFINITESIMAL: &str = "infinitesimal equivariance";
const RELATIONS: &str = "generalized clifford relations";
const CASIMIR: &str = "casimir of the zero map";
const GROUP: &str = "group equivariance, probed on rational unitaries";
const CG: &str = "projection construction of clifford maps";

fn gram(m: i64) -> Matrix {
    if m < 0 {
        Matrix::zeros(0, 0)
    } else {
        gram_matrix(m as u32)
    }
}

fn basis_name(i: usize) -> String {
    format!("e{}", i + 1)
}

/// Generator tables for every spin a check at source spin `m` touches.
struct Table {
    m: i64,
    // indexed by spin offset (m-2 ..= m+2) then generator
    zero: Vec<[Matrix; 3]>,
    plus: Vec<[Matrix; 3]>,
    minus: Vec<[Matrix; 3]>,
}

impl Table {
    fn new(m: i64) -> Self {
        let build = |kind| (m - 2..=m + 2).map(|s| [0, 1, 2].map(|i| clifford_generator(kind, s, i))).collect();
        Table { m, zero: build(CliffordKind::Zero), plus: build(CliffordKind::Plus), minus: build(CliffordKind::Minus) }
    }

    fn get(&self, kind: CliffordKind, spin: i64, i: usize) -> &Matrix {
        let slot = (spin - self.m + 2) as usize;
        match kind {
            CliffordKind::Zero => &self.zero[slot][i],
            CliffordKind::Plus => &self.plus[slot][i],
            CliffordKind::Minus => &self.minus[slot][i],
        }
    }
}

fn commutator(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    &(a * b) - &(c * d)
}

/// Accumulates residuals over basis pairs into one report entry.
struct PairCheck {
    entry: CheckEntry,
    checked: usize,
}

impl PairCheck {
    fn new(check: &str, provenance: &str, m: i64) -> Self {
        PairCheck { entry: CheckEntry::new(check, provenance).param("m", m), checked: 0 }
    }

    fn record(&mut self, x: usize, y: Option<usize>, residual: Matrix) {
        self.checked += 1;
        if residual.is_zero() || !self.entry.passed() {
            if !residual.is_zero() {
                self.bump_failures();
            }
            return;
        }
        let mut w = residual_witness(&residual);
        w["x"] = json!(basis_name(x));
        if let Some(y) = y {
            w["y"] = json!(basis_name(y));
        }
        w["failing_cases"] = json!(1);
        self.entry = self.entry.clone().fail_with(w);
    }

    fn bump_failures(&mut self) {
        if let Some(w) = self.entry.witness.as_mut() {
            let n = w["failing_cases"].as_u64().unwrap_or(0);
            w["failing_cases"] = json!(n + 1);
        }
    }

    fn finish(self) -> CheckEntry {
        self.entry.value("cases", self.checked)
    }
}

fn lie_basis_bracket(i: usize, j: usize) -> LieVector {
    LieVector::basis(i).bracket(&LieVector::basis(j))
}

fn algebra_entries(m: i64) -> Vec<CheckEntry> {
    use CliffordKind::{Minus, Plus, Zero};
    let t = Table::new(m);
    let r = |k, s, i| t.get(k, s, i);
    let br = |k, s, i, j| clifford_matrix(k, s, &lie_basis_bracket(i, j));
    let ident = |s: i64, c: Rational| Matrix::scalar_identity(rep_dim(s), &Scalar::real(c));

    let mut out = Vec::new();

    for (name, kind, target) in [("adjoint_zero", Zero, m), ("adjoint_plus", Plus, m + 2), ("adjoint_minus", Minus, m - 2)] {
        let mut c = PairCheck::new(name, ADJOINT, m);
        let back = match kind {
            Zero => Zero,
            Plus => Minus,
            Minus => Plus,
        };
        for i in 0..3 {
            let adj = gram_adjoint(r(kind, m, i), &gram(m), &gram(target)).expect("Gram matrices are invertible");
            c.record(i, None, &adj + r(back, target, i));
        }
        out.push(c.finish());
    }

    let m_f = Rational::from_integer(m);
    let m2 = &m_f + &q(2, 1);
    for (name, kind, target) in [("equivariance_zero", Zero, m), ("equivariance_plus", Plus, m + 2), ("equivariance_minus", Minus, m - 2)]
    {
        let mut c = PairCheck::new(name, INFINITESIMAL, m);
        for i in 0..3 {
            for j in 0..3 {
                let rhs = commutator(r(Zero, target, i), r(kind, m, j), r(kind, m, j), r(Zero, m, i));
                c.record(i, Some(j), &br(kind, m, i, j) - &rhs);
            }
        }
        out.push(c.finish());
    }

    let half = q(1, 2);
    let mut rel = [
        PairCheck::new("relation_plus_commutator", RELATIONS, m),
        PairCheck::new("relation_minus_commutator", RELATIONS, m),
        PairCheck::new("relation_zero_via_minus", RELATIONS, m),
        PairCheck::new("relation_zero_via_plus", RELATIONS, m),
    ];
    for i in 0..3 {
        for j in 0..3 {
            let delta = if i == j { Rational::one() } else { Rational::zero() };
            // ρ⁰_{m+2}(X)ρ⁺(Y) - ρ⁺(X)ρ⁰(Y) = (m+2)/2 ρ⁺([X,Y])
            let lhs = commutator(r(Zero, m + 2, i), r(Plus, m, j), r(Plus, m, i), r(Zero, m, j));
            rel[0].record(i, Some(j), &lhs - &br(Plus, m, i, j).scale_rational(&(&m2 * &half)));
            // ρ⁰_{m-2}(X)ρ⁻(Y) - ρ⁻(X)ρ⁰(Y) = -m/2 ρ⁻([X,Y])
            let lhs = commutator(r(Zero, m - 2, i), r(Minus, m, j), r(Minus, m, i), r(Zero, m, j));
            rel[1].record(i, Some(j), &lhs + &br(Minus, m, i, j).scale_rational(&(&m_f * &half)));
            // ρ⁰(X)ρ⁰(Y) + ρ⁺_{m-2}(X)ρ⁻(Y) = m/2 ρ⁰([X,Y]) - m²(X,Y)
            let lhs = &(r(Zero, m, i) * r(Zero, m, j)) + &(r(Plus, m - 2, i) * r(Minus, m, j));
            let rhs = &br(Zero, m, i, j).scale_rational(&(&m_f * &half)) - &ident(m, &(&m_f * &m_f) * &delta);
            rel[2].record(i, Some(j), &lhs - &rhs);
            // ρ⁰(X)ρ⁰(Y) + ρ⁻_{m+2}(X)ρ⁺(Y) = -(m+2)/2 ρ⁰([X,Y]) - (m+2)²(X,Y)
            let lhs = &(r(Zero, m, i) * r(Zero, m, j)) + &(r(Minus, m + 2, i) * r(Plus, m, j));
            let rhs = &(-&br(Zero, m, i, j).scale_rational(&(&m2 * &half))) - &ident(m, &(&m2 * &m2) * &delta);
            rel[3].record(i, Some(j), &lhs - &rhs);
        }
    }
    out.extend(rel.into_iter().map(PairCheck::finish));

    let sum = (0..3).fold(Matrix::zeros(rep_dim(m), rep_dim(m)), |acc, i| &acc + &(r(Zero, m, i) * r(Zero, m, i)));
    let value = &m_f * &m2;
    let residual = &(-&sum) - &ident(m, value.clone());
    let entry = CheckEntry::new("casimir", CASIMIR).param("m", m).value("eigenvalue", value.to_string());
    out.push(crate::report::zero_check(entry, &residual));
    out
}

/// Checks, for each `m ≤ m_max` and all ordered basis pairs, Gram-adjointness,
/// infinitesimal equivariance, the four generalized Clifford relations with the
/// bilinear pairing `(e_i, e_j) = δ_ij`, and `-Σ ρ⁰(e_i)² = m(m+2)`.
///
/// One entry per (identity, m), ascending in `m`.
pub fn verify_algebra(m_max: u32) -> VerificationReport {
    let per_m: Vec<Vec<CheckEntry>> = (0..=m_max as i64).into_par_iter().map(algebra_entries).collect();
    let mut report = VerificationReport::new("verify-algebra");
    per_m.into_iter().flatten().for_each(|e| report.push(e));
    report
}

/// Group-level equivariance `ρ^kind(gXg⁻¹) = ρ_target(g) ρ^kind(X) ρ_m(g⁻¹)`
/// for `X ∈ {e₁, e₂, e₃}` and every kind, with `gXg⁻¹` taken in `SU(2)`.
pub fn verify_group_equivariance(m: u32, g: &GroupElement) -> VerificationReport {
    let mut report = VerificationReport::new("verify-equivariance");
    let g_inv = g.inverse();
    let src = rep_group(m, &g_inv);
    let entries = g.matrix().entries().iter().map(|s| s.to_string()).collect::<Vec<_>>();
    for kind in CliffordKind::ALL {
        let target = kind.target(m as i64);
        let lhs_rep = if target < 0 { Matrix::zeros(0, 0) } else { rep_group(target as u32, g) };
        let mut entry = CheckEntry::new(format!("group_equivariance_{kind}"), GROUP)
            .param("m", m)
            .param("g", entries.clone());
        for i in 0..3 {
            let conj = LieVector::from_matrix(&g.conjugate(&LieVector::basis(i).to_matrix()))
                .expect("conjugation preserves tracelessness");
            let lhs = clifford_matrix(kind, m as i64, &conj);
            let rhs = &(&lhs_rep * &clifford_matrix(kind, m as i64, &LieVector::basis(i))) * &src;
            let residual = &lhs - &rhs;
            if !residual.is_zero() {
                let mut w = residual_witness(&residual);
                w["x"] = json!(basis_name(i));
                entry = entry.fail_with(w);
                break;
            }
        }
        report.push(entry);
    }
    report
}

/// [`verify_group_equivariance`] from a raw matrix, rejecting elements outside `SU(2)`.
pub fn verify_group_equivariance_matrix(m: u32, g: Matrix) -> Result<VerificationReport, GroupError> {
    Ok(verify_group_equivariance(m, &GroupElement::new(g)?))
}

/// Image of `e_i` in `V_2` used for the projection construction.
///
/// `e_i` is identified with `σ_i`, and `σ_i` is sent to `V_2` through
/// `iσ₁/2 ↦ z¹`, `(σ₂ + iσ₃)/2 ↦ z⁰`, `(σ₂ - iσ₃)/2 ↦ z²`.
pub fn lie_to_v2(x: &LieVector) -> Matrix {
    let [c1, c2, c3] = &x.coords;
    let i = Scalar::i();
    Matrix::column_vector(vec![c2 - &(c3 * &i), c1 * &Scalar::gauss(0, -2), c2 + &(c3 * &i)])
}

/// Compares each explicit Clifford map at spin `m` with `v ↦ pr_j(v ⊗ X)`
/// built from the Clebsch–Gordan decomposition of `V_m ⊗ V_2`.
///
/// A single scalar `c` per kind is read off the first nonzero entry; every
/// direction must then satisfy `ρ(X) = c · pr(· ⊗ X)`. Since the embedding is
/// isometric only up to `α` (`E*GE = αG_j`), the squared constant relative to
/// an isometric projection is `|c|²/α`.
pub fn cg_oracle_compare(m: u32) -> VerificationReport {
    let mut report = VerificationReport::new("verify-cg");
    let comps = cg_decompose(m, 2);
    let tg = tensor_gram(m, 2);
    let m_q = Rational::from_integer(m as i64);
    for kind in CliffordKind::ALL {
        let target = kind.target(m as i64);
        let expected = match kind {
            CliffordKind::Zero => &(&m_q * &(&m_q + &q(2, 1))) * &q(1, 4),
            CliffordKind::Plus => &(&(&m_q + &q(1, 1)) * &(&m_q + &q(2, 1))) * &q(1, 2),
            CliffordKind::Minus => &(&m_q * &(&m_q + &q(1, 1))) * &q(1, 2),
        };
        let mut entry = CheckEntry::new(format!("cg_{kind}"), CG).param("m", m);
        let explicit: Vec<Matrix> = (0..3).map(|i| clifford_generator(kind, m as i64, i)).collect();
        let comp = comps.iter().find(|c| c.j as i64 == target);
        let Some(comp) = comp else {
            let ok = explicit.iter().all(Matrix::is_zero);
            entry = entry.value("target", if target < 0 { "zero space" } else { "no summand" });
            report.push(if ok { entry.status(true) } else { entry.fail_with(json!({"reason": "nonzero map into zero space"})) });
            continue;
        };
        let projected: Vec<Matrix> = (0..3)
            .map(|i| &comp.projection * &Matrix::identity(m as usize + 1).kron(&lie_to_v2(&LieVector::basis(i))))
            .collect();
        let alpha = comp.isometry_defect(&tg);

        // first nonzero of the projected maps, scanned by direction then entry
        let lead = projected.iter().zip(&explicit).find_map(|(p, e)| p.first_nonzero().map(|((r, c), v)| (e.get(r, c).clone(), v.clone())));
        let Some((num, den)) = lead else {
            let ok = explicit.iter().all(Matrix::is_zero);
            entry = entry.value("squared_constant", "0");
            let ok = ok && expected.is_zero();
            report.push(if ok { entry.status(true) } else { entry.fail_with(json!({"reason": "projection vanishes"})) });
            continue;
        };
        let c = &num / &den;
        let mut failed = None;
        for i in 0..3 {
            let residual = &explicit[i] - &projected[i].scale(&c);
            if !residual.is_zero() {
                let mut w = residual_witness(&residual);
                w["x"] = json!(basis_name(i));
                let witness_col = (0..residual.cols()).find(|&k| !residual.column(k).is_zero()).unwrap_or(0);
                w["witness_vector"] = json!(format!("z^{witness_col}"));
                failed = Some(w);
                break;
            }
        }
        let squared = &c.norm_sqr() / &alpha;
        entry = entry
            .value("scalar", c.to_string())
            .value("embedding_scale", alpha.to_string())
            .value("squared_constant", squared.to_string())
            .value("expected", expected.to_string());
        entry = match failed {
            Some(w) => entry.fail_with(w),
            None if squared != expected => entry.fail_with(json!({"reason": "squared constant mismatch"})),
            None => entry.status(true),
        };
        report.push(entry);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let r = verify_algebra(3);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.entries.len(), 4 * 11);
    }

    #[test]
    fn broken_relation_is_reported() {
        // a wrong sign in the adjoint check would show up as a residual
        let a = clifford_generator(CliffordKind::Plus, 1, 0);
        let adj = gram_adjoint(&a, &gram(1), &gram(3)).unwrap();
        assert!(!(&adj - &clifford_generator(CliffordKind::Minus, 3, 0)).is_zero());
    }

    #[test]
    fn group_equivariance_on_test_set() {
        for m in [0, 1, 2, 3] {
            for g in GroupElement::test_set() {
                assert!(verify_group_equivariance(m, &g).passed(), "m = {m}");
            }
        }
    }

    #[test]
    fn rejects_non_group_matrix() {
        let bad = Matrix::diag(vec![Scalar::int(2), Scalar::int(2)]);
        assert!(verify_group_equivariance_matrix(1, bad).is_err());
    }

    #[test]
    fn cg_constants_at_five() {
        let r = cg_oracle_compare(5);
        assert!(r.passed(), "{:?}", r.entries);
        let got: Vec<_> = r.entries.iter().map(|e| e.values["squared_constant"].as_str().unwrap().to_string()).collect();
        assert_eq!(got, vec!["35/4", "21", "15"]);
    }

    #[test]
    fn cg_degenerate_minus() {
        for m in [0, 1] {
            let r = cg_oracle_compare(m);
            assert!(r.passed());
            assert_eq!(r.entries[2].values["target"], "zero space");
        }
    }
}
