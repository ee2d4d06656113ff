//! The shared analysis report consumed by the CLI `analyze` subcommand and
//! the C ABI. Key order in the serialized report follows field order here
//! and is part of the output contract.

use serde::Serialize;

use crate::completeness::{is_simple, wille_property};
use crate::error::Result;
use crate::lattice::Lattice;
use crate::order::{longest_chain, max_antichain};

/// An individual analysis check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Width,
    Height,
    Distributive,
    Simple,
    Wille,
    OpcWille,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Width,
        Check::Height,
        Check::Distributive,
        Check::Simple,
        Check::Wille,
        Check::OpcWille,
    ];

    pub fn parse(name: &str) -> Option<Check> {
        Some(match name {
            "width" => Check::Width,
            "height" => Check::Height,
            "distributive" => Check::Distributive,
            "simple" => Check::Simple,
            "wille" => Check::Wille,
            "opc-wille" => Check::OpcWille,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Check::Width => "width",
            Check::Height => "height",
            Check::Distributive => "distributive",
            Check::Simple => "simple",
            Check::Wille => "wille",
            Check::OpcWille => "opc-wille",
        }
    }
}

/// Analysis results; fields for checks that were not requested stay absent.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub format: &'static str,
    pub n: usize,
    pub bottom: usize,
    pub top: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distributive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wille: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub opc_wille: Option<bool>,
}

/// Runs the requested checks. `opc-wille` implies running both sub-checks.
pub fn run_analysis(l: &Lattice, checks: &[Check]) -> Result<AnalysisReport> {
    let mut report = AnalysisReport {
        format: "analysis-v1",
        n: l.len(),
        bottom: l.bottom(),
        top: l.top(),
        width: None,
        height: None,
        distributive: None,
        simple: None,
        wille: None,
        opc_wille: None,
    };
    for check in checks {
        match check {
            Check::Width => report.width = Some(max_antichain(l.poset()).len()),
            Check::Height => report.height = Some(longest_chain(l.poset()).len()),
            Check::Distributive => report.distributive = Some(l.is_distributive()),
            Check::Simple => report.simple = Some(is_simple(l)?.0),
            Check::Wille => report.wille = Some(wille_property(l).0),
            Check::OpcWille => {
                let simple = is_simple(l)?.0;
                let wille = wille_property(l).0;
                report.opc_wille = Some(simple && wille);
            }
        }
    }
    Ok(report)
}
