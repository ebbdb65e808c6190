use std::fmt;

use crate::extract::{extract, BoundCertificate, TwoRegularSubgraph};
use crate::format::serialize_multigraph;
use crate::graph::Multigraph;
use crate::error::Result;

use super::{brute_force_f2, enumerate_subcubic, EnumerationOptions, OracleReport, ORACLE_LIMIT};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleMode {
    /// Run the exhaustive search up to its order limit.
    #[default]
    Auto,
    Never,
}

/// Everything computed for one graph that passed.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub subgraph: TwoRegularSubgraph,
    pub certificate: BoundCertificate,
    pub oracle: Option<OracleReport>,
}

/// A graph on which some check failed, with everything computed for it.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub graph: Multigraph,
    pub failures: Vec<String>,
    pub subgraph: Option<TwoRegularSubgraph>,
    pub certificate: Option<BoundCertificate>,
    pub oracle: Option<OracleReport>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "counterexample:")?;
        for line in serialize_multigraph(&self.graph).lines() {
            writeln!(f, "  {line}")?;
        }
        for failure in &self.failures {
            writeln!(f, "failed: {failure}")?;
        }
        if let Some(cert) = &self.certificate {
            for line in cert.to_document().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        if let Some(h) = &self.subgraph {
            writeln!(f, "extracted cycles: {:?}", h.cycles)?;
        }
        if let Some(o) = &self.oracle {
            writeln!(f, "oracle f2: {}, witness cycles: {:?}", o.f2_exact, o.witness.cycles)?;
        }
        Ok(())
    }
}

/// Runs the extractor and, within limits, the exhaustive oracle, and checks
/// the bound, the validity of both subgraphs, and that equality happens
/// exactly when every component is of an extremal class.
pub fn check_theorem(
    g: &Multigraph,
    mode: OracleMode,
) -> std::result::Result<TheoremCheck, Box<Counterexample>> {
    let mut cx = Counterexample {
        graph: g.clone(),
        failures: Vec::new(),
        subgraph: None,
        certificate: None,
        oracle: None,
    };
    let (h, cert) = match extract(g) {
        Ok(found) => found,
        Err(e) => {
            cx.failures.push(format!("extraction failed: {e}"));
            return Err(Box::new(cx));
        }
    };
    if let Err(e) = h.validate(g) {
        cx.failures.push(format!("extracted subgraph is invalid: {e}"));
    }
    let omitted = g.vertex_count() - h.vertex_count();
    if omitted > cert.bound_omitted {
        cx.failures.push(format!(
            "extraction omits {omitted} vertices, bound is {}",
            cert.bound_omitted
        ));
    }
    let extremal = cert.components.iter().all(|r| r.class.is_extremal());
    if let Some(eq) = cert.equality {
        if eq != extremal {
            cx.failures.push(format!(
                "extraction equality is {eq} but the components being extremal is {extremal}"
            ));
        }
    }

    let oracle = if mode == OracleMode::Auto && g.vertex_count() <= ORACLE_LIMIT {
        match brute_force_f2(g) {
            Ok(report) => Some(report),
            Err(e) => {
                cx.failures.push(format!("oracle failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    if let Some(o) = &oracle {
        if !o.bound_holds {
            cx.failures.push(format!("f2 = {} violates the bound {}", o.f2_exact, o.bound));
        }
        if o.f2_exact < h.vertex_count() {
            cx.failures.push(format!(
                "oracle f2 = {} is below the extracted {}",
                o.f2_exact,
                h.vertex_count()
            ));
        }
        if cert.equality.is_some() && o.equality_exact != extremal {
            cx.failures.push(format!(
                "oracle equality is {} but the components being extremal is {extremal}",
                o.equality_exact
            ));
        }
    }

    if cx.failures.is_empty() {
        Ok(TheoremCheck { subgraph: h, certificate: cert, oracle })
    } else {
        cx.subgraph = Some(h);
        cx.certificate = Some(cert);
        cx.oracle = oracle;
        Err(Box::new(cx))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub graphs: usize,
    /// Graphs on which the bound is attained with equality.
    pub equality_cases: usize,
    /// Largest omission seen.
    pub max_omitted: usize,
}

/// Checks every graph of [`enumerate_subcubic`] on `n` vertices, stopping at
/// the first counterexample.
pub fn check_all(
    n: usize,
    options: EnumerationOptions,
    mode: OracleMode,
) -> Result<std::result::Result<EnumerationSummary, Box<Counterexample>>> {
    let mut summary = EnumerationSummary::default();
    for g in enumerate_subcubic(n, options)? {
        match check_theorem(&g, mode) {
            Ok(check) => {
                summary.graphs += 1;
                summary.equality_cases += usize::from(check.certificate.equality == Some(true));
                summary.max_omitted = summary.max_omitted.max(check.certificate.achieved_omitted);
            }
            Err(cx) => return Ok(Err(cx)),
        }
    }
    Ok(Ok(summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn k4_passes() {
        let check = check_theorem(&k4(), OracleMode::Auto).unwrap();
        assert_eq!(check.certificate.achieved_omitted, 0);
        assert_eq!(check.oracle.unwrap().f2_exact, 4);
    }

    #[test]
    fn k33_minus_vertex_is_tight() {
        let g = k33().remove_vertex(3).graph;
        let check = check_theorem(&g, OracleMode::Auto).unwrap();
        let o = check.oracle.unwrap();
        assert_eq!(o.f2_exact, 4);
        assert!(o.equality_exact);
    }

    #[test]
    fn all_small_graphs() {
        let options = EnumerationOptions::default();
        for n in 0..=5 {
            let summary = check_all(n, options, OracleMode::Auto).unwrap().unwrap();
            assert!(summary.graphs > 0);
        }
        assert!(check_all(9, options, OracleMode::Auto).is_err());
    }

    #[test]
    fn counterexample_report_lists_the_graph() {
        let cx = Counterexample {
            graph: k4(),
            failures: vec!["made up".into()],
            subgraph: None,
            certificate: None,
            oracle: None,
        };
        let text = cx.to_string();
        assert!(text.contains("  4 6"));
        assert!(text.contains("failed: made up"));
    }
}
