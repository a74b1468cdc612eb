//! The Dehn-function decision procedure for standard solvable input.
//!
//! Obstruction flags are assembled from the weight geometry and the
//! degree-zero homology; the classifier then walks a fixed decision
//! order, collecting one justification line per triggered condition.

use crate::homology::{h2_degree_zero, killing_degree_zero};
use crate::lie::GradedLieAlgebra;
use crate::weights::{tameness_flags, TamenessFlags, WeightSet};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("acting group rank must be at least 1, got {0}")]
    InvalidRank(u32),
    #[error("algebra fails validation: {0}")]
    InvalidAlgebra(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionFlags {
    pub sol: bool,
    pub sol_non_archimedean: bool,
    pub homological: bool,
    pub homological_non_archimedean: bool,
    pub kill_zero_vanishes: bool,
}

/// Assembles the obstruction flags of a validated algebra seen as the
/// unipotent part of a standard solvable group.
pub fn obstruction_flags(alg: &GradedLieAlgebra) -> (ObstructionFlags, TamenessFlags, Vec<String>) {
    let ws = WeightSet::from_algebra(alg);
    let na_fields: Vec<String> = alg
        .fields
        .iter()
        .filter(|f| !f.kind.is_archimedean())
        .map(|f| f.id.clone())
        .collect();
    let tflags = tameness_flags(&ws, &na_fields);
    let h2 = h2_degree_zero(alg);
    let kill = killing_degree_zero(alg);
    let homological = h2.per_field_dims.values().any(|&d| d > 0);
    let homological_non_archimedean = alg
        .fields
        .iter()
        .filter(|f| !f.kind.is_archimedean())
        .any(|f| h2.per_field_dims.get(&f.id).copied().unwrap_or(0) > 0);
    // the vanishing that suppresses welding relations is per field
    // component: cross-component symmetric tensors are not module
    // elements over the product ring
    let kill_zero_vanishes = kill.per_field_dims.values().all(|&d| d == 0);
    let mut warnings = Vec::new();
    if ws
        .weights
        .iter()
        .zip(&ws.principal)
        .any(|(w, &p)| p && w.is_zero())
    {
        warnings.push(
            "zero is a principal weight: the input is not the derived algebra of a standard \
             solvable group; flags are computed from the supplied grading at face value"
                .to_string(),
        );
    }
    (
        ObstructionFlags {
            sol: tflags.sol_obstruction,
            sol_non_archimedean: tflags.non_archimedean_sol_obstruction,
            homological,
            homological_non_archimedean,
            kill_zero_vanishes,
        },
        tflags,
        warnings,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotCompactlyPresented,
    ExponentialDehn,
    PolyAtMostCubic,
    Quadratic,
    Linear,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::NotCompactlyPresented => "not compactly presented",
            Verdict::ExponentialDehn => "exponential Dehn function",
            Verdict::PolyAtMostCubic => "polynomial Dehn function, at most cubic",
            Verdict::Quadratic => "at most quadratic Dehn function (exactly quadratic when the acting group has rank >= 2)",
            Verdict::Linear => "linear Dehn function (Gromov-hyperbolic)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Justification {
    /// The result invoked, named by what it asserts.
    pub result: String,
    /// The condition of the input that triggered it.
    pub condition: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub justification: Vec<Justification>,
    pub warnings: Vec<String>,
}

/// Classifies a validated algebra with `a_rank >= 1`.
///
/// Decision order: non-archimedean obstructions first (no compact
/// presentation), then any obstruction (exponential), then the rank-one
/// dichotomy (linear), then the quadratic criteria (tame, stably 2-tame,
/// or vanishing degree-zero Killing module), and otherwise the cubic
/// bound.
pub fn classify(alg: &GradedLieAlgebra) -> Result<Classification, ClassifyError> {
    if alg.a_rank < 1 {
        return Err(ClassifyError::InvalidRank(alg.a_rank));
    }
    let violations = alg.validate();
    if let Some(v) = violations.first() {
        return Err(ClassifyError::InvalidAlgebra(v.to_string()));
    }
    let (flags, tflags, mut warnings) = obstruction_flags(alg);
    let mut justification = Vec::new();

    if flags.sol_non_archimedean || flags.homological_non_archimedean {
        if flags.sol_non_archimedean {
            justification.push(Justification {
                result: "a quasi-opposite pair of principal weights on the non-archimedean part \
                         rules out any compact presentation"
                    .to_string(),
                condition: "non-archimedean SOL obstruction".to_string(),
            });
        }
        if flags.homological_non_archimedean {
            justification.push(Justification {
                result: "nonvanishing degree-zero second homology of a non-archimedean component \
                         rules out any compact presentation"
                    .to_string(),
                condition: "non-archimedean 2-homological obstruction".to_string(),
            });
        }
        return Ok(Classification {
            verdict: Verdict::NotCompactlyPresented,
            justification,
            warnings,
        });
    }

    if flags.sol || flags.homological {
        if flags.sol {
            justification.push(Justification {
                result: "quasi-opposite principal weights give loops whose Stokes integrals grow \
                         exponentially, forcing at least exponential filling area"
                    .to_string(),
                condition: "SOL obstruction".to_string(),
            });
        }
        if flags.homological {
            justification.push(Justification {
                result: "a nontrivial degree-zero central extension is exponentially distorted, \
                         forcing at least exponential filling area"
                    .to_string(),
                condition: "2-homological obstruction".to_string(),
            });
        }
        justification.push(Justification {
            result: "standard solvable groups always satisfy an exponential upper bound"
                .to_string(),
            condition: "standard solvable input".to_string(),
        });
        return Ok(Classification {
            verdict: Verdict::ExponentialDehn,
            justification,
            warnings,
        });
    }

    if alg.a_rank == 1 {
        justification.push(Justification {
            result: "with a rank-one acting group and no SOL obstruction, some element acts as a \
                     compaction and the group is Gromov-hyperbolic"
                .to_string(),
            condition: "rank-one acting group without SOL obstruction".to_string(),
        });
        return Ok(Classification {
            verdict: Verdict::Linear,
            justification,
            warnings,
        });
    }

    if tflags.tame || tflags.stably_two_tame || flags.kill_zero_vanishes {
        if tflags.tame {
            justification.push(Justification {
                result: "tame groups retract onto the acting group and fill quadratically"
                    .to_string(),
                condition: "tame: zero outside the convex hull of the weights".to_string(),
            });
        }
        if tflags.stably_two_tame {
            justification.push(Justification {
                result: "with no quasi-opposite weights at all, every invariant subgroup is free \
                         of the SOL obstruction and the filling is quadratic"
                    .to_string(),
                condition: "stably 2-tame weight configuration".to_string(),
            });
        }
        if flags.kill_zero_vanishes {
            justification.push(Justification {
                result: "vanishing degree-zero Killing module removes the welding relations, \
                         leaving a presentation with quadratic filling"
                    .to_string(),
                condition: "Kill(u)_0 = 0 together with no SOL or homological obstruction"
                    .to_string(),
            });
        }
        return Ok(Classification {
            verdict: Verdict::Quadratic,
            justification,
            warnings,
        });
    }

    warnings.push(
        "welding relations present (nonvanishing degree-zero Killing module): the cubic bound \
         is not known to be attained"
            .to_string(),
    );
    justification.push(Justification {
        result: "without obstructions the amalgam presentation fills quadratically except for \
                 welding relations, which fill cubically"
            .to_string(),
        condition: "no obstruction, but nonvanishing degree-zero Killing module".to_string(),
    });
    Ok(Classification {
        verdict: Verdict::PolyAtMostCubic,
        justification,
        warnings,
    })
}
