//! Report records emitted by the verification suites.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

/// One line of a `verify` run. Field order is the output column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub max_residual: f64,
    /// `None` for findings.
    pub tolerance: Option<f64>,
    pub samples: usize,
    pub seed: u64,
    pub notes: String,
}

impl VerificationReport {
    /// Passes iff `max_residual ≤ tolerance`; NaN fails.
    pub fn gate(
        check: &str,
        max_residual: f64,
        tolerance: f64,
        samples: usize,
        seed: u64,
        notes: impl Into<String>,
    ) -> Self {
        let status = if max_residual <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check: check.to_string(),
            status,
            max_residual,
            tolerance: Some(tolerance),
            samples,
            seed,
            notes: notes.into(),
        }
    }

    /// Gate for a quantity that must exceed `threshold` somewhere: the
    /// residual is the shortfall `max(0, threshold - observed)`.
    pub fn at_least(
        check: &str,
        observed: f64,
        threshold: f64,
        samples: usize,
        seed: u64,
        what: &str,
    ) -> Self {
        let shortfall = if observed.is_nan() {
            f64::NAN
        } else {
            (threshold - observed).max(0.0)
        };
        Self::gate(
            check,
            shortfall,
            0.0,
            samples,
            seed,
            format!("{what} = {observed:e}, required > {threshold:e}"),
        )
    }

    pub fn finding(
        check: &str,
        max_residual: f64,
        samples: usize,
        seed: u64,
        notes: impl Into<String>,
    ) -> Self {
        VerificationReport {
            check: check.to_string(),
            status: Status::Finding,
            max_residual,
            tolerance: None,
            samples,
            seed,
            notes: notes.into(),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// One row of the `wigner` sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WignerRow {
    pub xi: f64,
    pub eta: f64,
    /// Unsigned Wigner angle in `[0, π]`.
    pub angle: f64,
    /// Angle about `boost_axis × momentum_axis`.
    pub signed_angle: f64,
    /// Same, for the boosts applied in the opposite order with axes swapped.
    pub swapped_signed_angle: f64,
    pub axis_x: f64,
    pub axis_y: f64,
    pub axis_z: f64,
    /// `⟨S⟩` of `u(Λp, +½)` after the little-group rotation.
    pub spin_x: f64,
    pub spin_y: f64,
    pub spin_z: f64,
    pub expectation_residual: f64,
}

/// One row of the `table` sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub operator: String,
    pub mass: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
    pub energy: f64,
    pub su2_residual: f64,
    pub deviation_from_rest_spin: f64,
    pub raw_non_hermiticity: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gate_status() {
        assert_eq!(
            VerificationReport::gate("a", 1e-11, 1e-10, 1, 0, "").status,
            Status::Pass
        );
        assert_eq!(
            VerificationReport::gate("a", 1e-9, 1e-10, 1, 0, "").status,
            Status::Fail
        );
        assert_eq!(
            VerificationReport::gate("a", f64::NAN, 1e-10, 1, 0, "").status,
            Status::Fail
        );
        let r = VerificationReport::at_least("c", 0.2, 1e-3, 1, 0, "x");
        assert_eq!((r.status, r.max_residual), (Status::Pass, 0.0));
        let r = VerificationReport::at_least("c", 1e-4, 1e-3, 1, 0, "x");
        assert_eq!(r.status, Status::Fail);
        assert_eq!(
            VerificationReport::finding("f", 3.0, 1, 0, "").tolerance,
            None
        );
    }
}
