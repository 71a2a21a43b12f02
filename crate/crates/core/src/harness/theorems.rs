use super::census::{
    build_census, empirical_f, empirical_g, CensusOptions, CensusRecord, TmcCensus,
};
use super::HarnessError;
use crate::coloring::{count_colors, is_tmc, ColoringFile, TotalColoring, Verdict};
use crate::families::{
    gen_gnt, gen_gnt3, gen_gstar, gen_gts, gen_multipartite, gnt_range, part_profiles,
    FamilyInstance,
};
use crate::formulas::{f_eval, g_eval, top};
use crate::graph::{canonical_form, graph6_encode, Graph};
use crate::solvers::{
    complement_bound, djs_bound_holds, lower_bound_subgraph, lower_bound_theorem1,
    multipartite_coloring, tmc_exact, Mode, SIMPLE_MAX_ORDER,
};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T2,
    T3,
    T4,
    #[serde(rename = "L_GTS")]
    LGts,
    #[serde(rename = "L_GNT")]
    LGnt,
    #[serde(rename = "L_MULTI")]
    LMulti,
    #[serde(rename = "L_GSTAR")]
    LGstar,
    #[serde(rename = "L_LOWER")]
    LLower,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::T2,
        Theorem::T3,
        Theorem::T4,
        Theorem::LGts,
        Theorem::LGnt,
        Theorem::LMulti,
        Theorem::LGstar,
        Theorem::LLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::T4 => "T4",
            Theorem::LGts => "L_GTS",
            Theorem::LGnt => "L_GNT",
            Theorem::LMulti => "L_MULTI",
            Theorem::LGstar => "L_GSTAR",
            Theorem::LLower => "L_LOWER",
        }
    }

    /// What the check compares.
    pub fn description(self) -> &'static str {
        match self {
            Theorem::T2 => "tmc = m - n + 2 + l(G) on every census graph meeting one of the five sufficient conditions",
            Theorem::T3 => "least size forcing tmc >= k, census against the closed form f(n,k), every k",
            Theorem::T4 => "greatest size keeping tmc <= k, census against the closed form g(n,k), every k",
            Theorem::LGts => "clique with a stretched edge and s edges cut: tmc = m - n + 2 + t",
            Theorem::LGnt => "complete graph with each class's first vertex cut from its class: tmc = m",
            Theorem::LMulti => "complete multipartite graphs: tmc = m + r - t, and the star coloring reaches it",
            Theorem::LGstar => "one big part plus at most t - 2 inner edges: tmc = m + n - t",
            Theorem::LLower => "spanning-tree, complement and subgraph lower bounds on every census graph",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Theorem::ALL.iter().map(|t| t.name()).collect();
                format!("unknown check {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub item: String,
    pub expected: Option<usize>,
    pub observed: Option<usize>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub item: String,
    pub graph6: Option<String>,
    pub witness: Option<ColoringFile>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub n: usize,
    pub pass: bool,
    pub rows: Vec<ReportRow>,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremReport {
    fn new(theorem: Theorem, n: usize) -> Self {
        TheoremReport {
            theorem,
            n,
            pass: true,
            rows: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    fn push(
        &mut self,
        row: ReportRow,
        witness: Option<ColoringFile>,
        detail: impl FnOnce() -> String,
    ) {
        if !row.matched {
            self.pass = false;
            self.counterexamples.push(Counterexample {
                item: row.item.clone(),
                graph6: row.graph6.clone(),
                witness,
                detail: detail(),
            });
        }
        self.rows.push(row);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Rows as CSV with header `theorem,n,item,expected,observed,match,graph6`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), HarnessError> {
        #[derive(Serialize)]
        struct Line<'a> {
            theorem: &'a str,
            n: usize,
            item: &'a str,
            expected: Option<usize>,
            observed: Option<usize>,
            #[serde(rename = "match")]
            matched: bool,
            graph6: Option<&'a str>,
        }
        let mut w = csv::Writer::from_writer(out);
        if self.rows.is_empty() {
            w.write_record([
                "theorem", "n", "item", "expected", "observed", "match", "graph6",
            ])?;
        }
        for r in &self.rows {
            w.serialize(Line {
                theorem: self.theorem.name(),
                n: self.n,
                item: &r.item,
                expected: r.expected,
                observed: r.observed,
                matched: r.matched,
                graph6: r.graph6.as_deref(),
            })?;
        }
        w.flush()?;
        Ok(())
    }
}

fn row(
    item: String,
    expected: Option<usize>,
    observed: Option<usize>,
    graph6: Option<String>,
) -> ReportRow {
    ReportRow {
        item,
        matched: expected == observed,
        expected,
        observed,
        graph6,
    }
}

/// Runs one check at order `n`. Failures are recorded in the report; errors
/// are reserved for orders the check cannot handle.
pub fn check_theorem(
    theorem: Theorem,
    n: usize,
    options: &CensusOptions,
) -> Result<TheoremReport, HarnessError> {
    let domain = |reason: &str| HarnessError::Domain {
        check: theorem.name(),
        n,
        reason: reason.into(),
    };
    match theorem {
        Theorem::T2 => Ok(check_t2(&build_census(n, options)?)),
        Theorem::T3 | Theorem::T4 if n < 3 => Err(domain("needs n >= 3")),
        Theorem::T3 => Ok(check_t3(&build_census(n, options)?)),
        Theorem::T4 => Ok(check_t4(&build_census(n, options)?)),
        Theorem::LLower => check_lower(&build_census(n, options)?),
        _ if n > SIMPLE_MAX_ORDER => Err(domain("above the exact solver cap")),
        Theorem::LGts if n < 4 => Err(domain("needs n >= 4")),
        Theorem::LGts => {
            let instances = (2..=n - 2)
                .flat_map(|t| (0..t).map(move |s| gen_gts(n, t, s)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| domain(&e.to_string()))?;
            check_family(theorem, n, instances)
        }
        Theorem::LGnt => {
            let mut instances: Vec<FamilyInstance> = gnt_range(n)
                .map(|p| gen_gnt(n, p))
                .collect::<Result<_, _>>()
                .map_err(|e| domain(&e.to_string()))?;
            if let Ok(extra) = gen_gnt3(n) {
                if !instances.iter().any(|i| i.family == extra.family) {
                    instances.push(extra);
                }
            }
            if instances.is_empty() {
                return Err(domain("no valid parameters"));
            }
            check_family(theorem, n, instances)
        }
        Theorem::LGstar if n < 3 => Err(domain("needs n >= 3")),
        Theorem::LGstar => {
            let instances = (2..n)
                .flat_map(|t| (0..=t - 2).map(move |extra| gen_gstar(n, t, extra)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| domain(&e.to_string()))?;
            check_family(theorem, n, instances)
        }
        Theorem::LMulti if n < 2 => Err(domain("needs n >= 2")),
        Theorem::LMulti => check_multi(n),
    }
}

fn check_t2(census: &TmcCensus) -> TheoremReport {
    let n = census.n;
    let mut report = TheoremReport::new(Theorem::T2, n);
    for rec in census
        .records
        .iter()
        .filter(|r| r.predicates.theorem2_applicable)
    {
        let expected = rec.m + 2 + rec.leaves - n;
        let r = row(
            format!("m={} l={}", rec.m, rec.leaves),
            Some(expected),
            Some(rec.tmc),
            Some(rec.graph6.clone()),
        );
        report.push(r, Some(rec.witness.clone()), || {
            format!("tmc {} but m - n + 2 + l = {expected}", rec.tmc)
        });
    }
    report
}

fn largest_below(census: &TmcCensus, k: usize) -> Option<&CensusRecord> {
    census
        .records
        .iter()
        .filter(|r| r.tmc < k)
        .max_by_key(|r| r.m)
}

fn check_t3(census: &TmcCensus) -> TheoremReport {
    let n = census.n;
    let mut report = TheoremReport::new(Theorem::T3, n);
    for k in 3..=top(n) {
        let formula = f_eval(n, k).expect("k in domain").value;
        let empirical = empirical_f(census, k);
        let culprit = largest_below(census, k);
        let r = row(
            format!("k={k}"),
            Some(formula),
            Some(empirical),
            culprit.map(|c| c.graph6.clone()),
        );
        report.push(r, culprit.map(|c| c.witness.clone()), || {
            format!("f({n},{k}) = {formula} but the census gives {empirical}")
        });
    }
    report
}

fn check_t4(census: &TmcCensus) -> TheoremReport {
    let n = census.n;
    let mut report = TheoremReport::new(Theorem::T4, n);
    let star = census
        .records
        .iter()
        .find(|r| r.m + 1 == n && r.predicates.max_degree + 1 == n);
    let r = row(
        "star tmc".into(),
        Some(n),
        star.map(|s| s.tmc),
        star.map(|s| s.graph6.clone()),
    );
    report.push(r, star.map(|s| s.witness.clone()), || {
        format!("star of order {n} should have tmc {n}")
    });
    for k in 3..=top(n) {
        let formula = g_eval(n, k).expect("k in domain").value();
        let empirical = if k < n {
            // Undefined exactly when some tree already exceeds k.
            let tree_exceeds = census.records.iter().any(|r| r.m + 1 == n && r.tmc > k);
            (!tree_exceeds).then_some(n - 1)
        } else {
            empirical_g(census, k)
        };
        let culprit = census
            .records
            .iter()
            .filter(|r| r.tmc > k)
            .min_by_key(|r| r.m);
        let r = row(
            format!("k={k}"),
            formula,
            empirical,
            culprit.map(|c| c.graph6.clone()),
        );
        report.push(r, culprit.map(|c| c.witness.clone()), || {
            format!("g({n},{k}) = {formula:?} but the census gives {empirical:?}")
        });
    }
    report
}

fn family_label(inst: &FamilyInstance) -> String {
    serde_json::to_string(&inst.family).expect("families serialize")
}

fn check_family(
    theorem: Theorem,
    n: usize,
    instances: Vec<FamilyInstance>,
) -> Result<TheoremReport, HarnessError> {
    let mut report = TheoremReport::new(theorem, n);
    for inst in instances {
        let result = tmc_exact(&inst.graph, Mode::Simple)?;
        let r = row(
            family_label(&inst),
            Some(inst.predicted_tmc),
            Some(result.value),
            Some(graph6_encode(&inst.graph)),
        );
        report.push(r, Some(result.witness.to_file()), || {
            format!(
                "predicted {} but the exact solver finds {}",
                inst.predicted_tmc, result.value
            )
        });
    }
    Ok(report)
}

fn verified_count(g: &Graph, col: &TotalColoring) -> Option<usize> {
    matches!(is_tmc(g, col), Ok(Verdict::Valid)).then(|| count_colors(col))
}

fn check_multi(n: usize) -> Result<TheoremReport, HarnessError> {
    let profiles = part_profiles(n);
    let instances = profiles
        .iter()
        .map(|p| gen_multipartite(p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| HarnessError::Domain {
            check: "L_MULTI",
            n,
            reason: e.to_string(),
        })?;
    let mut report = check_family(Theorem::LMulti, n, instances.clone())?;
    for (parts, inst) in profiles.iter().zip(&instances) {
        let (g, col) = multipartite_coloring(parts)?;
        let r = row(
            format!("coloring {parts:?}"),
            Some(inst.predicted_tmc),
            verified_count(&g, &col),
            Some(graph6_encode(&g)),
        );
        report.push(r, Some(col.to_file()), || {
            "star coloring invalid or short of m + r - t".into()
        });
    }
    Ok(report)
}

/// Lower bounds on every census graph: the spanning-tree coloring, the
/// complement coloring where it applies, the sandwich
/// `m - n + 2 + l <= tmc <= m + n` (equality on the right only for complete
/// graphs), the leaf bound, and a deterministic sample of spanning-subgraph
/// bounds.
fn check_lower(census: &TmcCensus) -> Result<TheoremReport, HarnessError> {
    let n = census.n;
    let mut report = TheoremReport::new(Theorem::LLower, n);
    let tmc_by_form: HashMap<&str, usize> = census
        .records
        .iter()
        .map(|r| (r.canonical.as_str(), r.tmc))
        .collect();
    for rec in &census.records {
        let g = rec.graph();
        let g6 = Some(rec.graph6.clone());
        let floor = rec.m + 2 + rec.leaves - n;

        let col = lower_bound_theorem1(&g)?;
        let got = verified_count(&g, &col).filter(|&c| c <= rec.tmc);
        report.push(
            row(
                "spanning tree coloring".into(),
                Some(floor),
                got,
                g6.clone(),
            ),
            Some(col.to_file()),
            || {
                format!(
                    "coloring invalid, short of {floor}, or above tmc {}",
                    rec.tmc
                )
            },
        );

        if let Ok(b) = complement_bound(&g) {
            let claim = rec.m + n - b.reduced_order;
            let got = verified_count(&g, &b.coloring).filter(|&c| c <= rec.tmc);
            report.push(
                row("complement coloring".into(), Some(claim), got, g6.clone()),
                Some(b.coloring.to_file()),
                || {
                    format!(
                        "coloring invalid, short of {claim}, or above tmc {}",
                        rec.tmc
                    )
                },
            );
        }

        let sandwich =
            floor <= rec.tmc && rec.tmc <= rec.m + n && (rec.tmc == rec.m + n) == g.is_complete();
        let r = ReportRow {
            item: "m-n+2+l <= tmc <= m+n".into(),
            expected: Some(floor),
            observed: Some(rec.tmc),
            matched: sandwich,
            graph6: g6.clone(),
        };
        report.push(r, Some(rec.witness.clone()), || {
            "tmc outside its sandwich".into()
        });

        let djs = djs_bound_holds(&g)?;
        let r = ReportRow {
            item: "leaf bound".into(),
            expected: None,
            observed: None,
            matched: djs,
            graph6: g6,
        };
        report.push(r, None, || "leaf-count bound fails".into());
    }

    // Spanning subgraphs G - e, spread over the census.
    let stride = census.records.len().div_ceil(100).max(1);
    let mut sampled = 0;
    for (i, rec) in census.records.iter().enumerate() {
        if sampled == 100 || i % stride != 0 {
            continue;
        }
        let g = rec.graph();
        let edges = g.edges();
        let pick = (0..edges.len())
            .map(|j| edges[(i + j) % edges.len().max(1)])
            .find(|e| {
                let mut h = g.clone();
                h.remove_edge(e.u(), e.v());
                h.is_connected()
            });
        let Some(e) = pick else { continue };
        let mut h = g.clone();
        h.remove_edge(e.u(), e.v());
        let form: String = canonical_form(&h)
            .expect("census orders are canonicalizable")
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        let tmc_h = tmc_by_form[form.as_str()];
        let bound = lower_bound_subgraph(&g, &h, tmc_h)?;
        let r = ReportRow {
            item: format!("tmc >= m - m(G-{e}) + tmc(G-{e})"),
            expected: Some(bound),
            observed: Some(rec.tmc),
            matched: rec.tmc >= bound,
            graph6: Some(rec.graph6.clone()),
        };
        report.push(r, Some(rec.witness.clone()), || {
            format!("tmc {} below subgraph bound {bound}", rec.tmc)
        });
        sampled += 1;
    }
    Ok(report)
}
