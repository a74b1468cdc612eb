//! The aggregated analysis of one algebra: weights, tameness flags,
//! degree-zero homology and Killing dimensions, blow-up kernel, and the
//! final classification, in reproducible (byte-stable) structured form.

use crate::blowup::blow_up;
use crate::classify::{classify, obstruction_flags, Classification, ObstructionFlags};
use crate::homology::{
    h2_degree_zero, killing_degree_zero, DegreeZeroHomologyReport, KillingReport,
};
use crate::lie::GradedLieAlgebra;
use crate::rat::format_rational;
use crate::weights::{TamenessFlags, WeightSet};
use serde::Serialize;

#[derive(Serialize)]
pub struct WeightRow {
    pub coords: Vec<String>,
    pub dim: usize,
    pub principal: bool,
    pub zero: bool,
    pub fields: Vec<String>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub weight_dim: usize,
    pub a_rank: u32,
    pub dim: usize,
    pub weights: Vec<WeightRow>,
    pub tameness: TamenessFlags,
    pub obstructions: ObstructionFlags,
    pub homology: DegreeZeroHomologyReport,
    pub killing: KillingReport,
    pub blow_up_kernel_dim: usize,
    pub blow_up_dim: usize,
    pub classification: Classification,
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error("validation failed:\n{0}")]
    Validation(String),
    #[error(transparent)]
    Classify(#[from] crate::classify::ClassifyError),
}

/// Runs the full analysis on a validated algebra.
pub fn analyze(alg: &GradedLieAlgebra) -> Result<AnalysisReport, AnalyzeError> {
    let violations = alg.validate();
    if !violations.is_empty() {
        let text = violations
            .iter()
            .map(|v| format!("  - {v}"))
            .collect::<Vec<_>>()
            .join("\n");
        return Err(AnalyzeError::Validation(text));
    }
    let ws = WeightSet::from_algebra(alg);
    let (obstructions, tameness, _) = obstruction_flags(alg);
    let homology = h2_degree_zero(alg);
    let killing = killing_degree_zero(alg);
    let bu = blow_up(alg);
    let classification = classify(alg)?;
    let weights = ws
        .weights
        .iter()
        .enumerate()
        .map(|(i, w)| WeightRow {
            coords: w.0.iter().map(format_rational).collect(),
            dim: ws.multiplicities[i],
            principal: ws.principal[i],
            zero: w.is_zero(),
            fields: ws.field_tags[i].clone(),
        })
        .collect();
    Ok(AnalysisReport {
        name: alg.name.clone(),
        weight_dim: alg.weight_dim,
        a_rank: alg.a_rank,
        dim: alg.dim(),
        weights,
        tameness,
        obstructions,
        homology,
        killing,
        blow_up_kernel_dim: bu.kernel_dim,
        blow_up_dim: bu.blown_up.dim(),
        classification,
    })
}

impl AnalysisReport {
    /// Single JSON document with stable field order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("algebra          {}", self.name));
        line(format!(
            "dimension        {} over weight space Q^{}, acting rank {}",
            self.dim, self.weight_dim, self.a_rank
        ));
        line("weights          (dim) [principal] [zero] fields".to_string());
        for wr in &self.weights {
            line(format!(
                "  ({}) dim {}{}{} [{}]",
                wr.coords.join(", "),
                wr.dim,
                if wr.principal { "  principal" } else { "" },
                if wr.zero { "  zero" } else { "" },
                wr.fields.join(", ")
            ));
        }
        line(format!(
            "tameness         tame={} two_tame={} stably_two_tame={}",
            self.tameness.tame, self.tameness.two_tame, self.tameness.stably_two_tame
        ));
        line(format!(
            "obstructions     sol={} sol_na={} homological={} homological_na={}",
            self.obstructions.sol,
            self.obstructions.sol_non_archimedean,
            self.obstructions.homological,
            self.obstructions.homological_non_archimedean
        ));
        line(format!(
            "homology         dim(L2)_0={} dim(L3)_0={} dim Z2_0={} dim B2_0={} dim H2_0={} tame H2_0={}",
            self.homology.dim_lambda2_0,
            self.homology.dim_lambda3_0,
            self.homology.dim_z2_0,
            self.homology.dim_b2_0,
            self.homology.dim_h2_0,
            self.homology.dim_h2_tame_0
        ));
        let per_field: Vec<String> = self
            .homology
            .per_field_dims
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect();
        line(format!("  per field      {}", per_field.join(", ")));
        line(format!(
            "killing          dim(S2)_0={} dim im T_0={} dim Kill_0={} tame Kill_0={}",
            self.killing.dim_sym2_0,
            self.killing.dim_t_image_0,
            self.killing.dim_kill_0,
            self.killing.dim_kill_tame_0
        ));
        line(format!(
            "blow-up          dim {} with central kernel of dim {}",
            self.blow_up_dim, self.blow_up_kernel_dim
        ));
        line(format!("verdict          {}", self.classification.verdict));
        for j in &self.classification.justification {
            line(format!("  because        {} ({})", j.condition, j.result));
        }
        for warning in &self.classification.warnings {
            line(format!("  warning        {warning}"));
        }
        out
    }
}
