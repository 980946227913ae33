use std::collections::BTreeMap;
use std::fmt::Write;

use pmckit::modular::ModuleTree;
use pmckit::VertexSet;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub source: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Params {
    pub vc: Option<usize>,
    pub mw: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail,
    Skipped,
}

/// A disagreement found by `verify`.
#[derive(Debug, Serialize)]
pub struct Mismatch {
    pub graph: String,
    pub what: String,
    pub left: String,
    pub right: String,
    pub only_left: Vec<VertexSet>,
    pub only_right: Vec<VertexSet>,
}

#[derive(Debug, Default, Serialize)]
pub struct Results {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separators: Option<Vec<VertexSet>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pmcs: Option<Vec<VertexSet>>,
    pub counts: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub treewidth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fill_in: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<ModuleTree>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<String, Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub graph: GraphInfo,
    pub params: Params,
    pub results: Results,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
    pub verified: bool,
}

impl Report {
    pub fn new(command: &str, graph: GraphInfo) -> Self {
        Report {
            command: command.into(),
            graph,
            params: Params::default(),
            results: Results::default(),
            timings_ms: None,
            verified: true,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, outcome: Check) {
        if outcome == Check::Fail {
            self.verified = false;
        }
        self.results.checks.insert(name.into(), outcome);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(out, "command   {}", self.command).unwrap();
        writeln!(out, "graph     {} (n={}, m={})", self.graph.source, self.graph.n, self.graph.m).unwrap();
        writeln!(out, "vc        {}", opt(self.params.vc)).unwrap();
        writeln!(out, "mw        {}", opt(self.params.mw)).unwrap();
        for (k, v) in &self.results.counts {
            writeln!(out, "{k:<9} {v}").unwrap();
        }
        if let Some(tw) = self.results.treewidth {
            writeln!(out, "treewidth {tw}").unwrap();
        }
        if let Some(f) = self.results.fill_in {
            writeln!(out, "fill_in   {f}").unwrap();
        }
        for (name, list) in [("separator", &self.results.separators), ("pmc", &self.results.pmcs)] {
            for s in list.iter().flatten() {
                writeln!(out, "{name:<9} {s}").unwrap();
            }
        }
        if let Some(tree) = &self.results.tree {
            for node in tree.nodes() {
                if !node.children.is_empty() {
                    writeln!(out, "node      {:?} {} children={}", node.kind, node.vertices, node.children.len()).unwrap();
                }
            }
        }
        for (k, v) in &self.results.checks {
            writeln!(out, "check     {k} {v:?}").unwrap();
        }
        for m in &self.results.mismatches {
            writeln!(out, "mismatch  {} {}: {} vs {}", m.graph, m.what, m.left, m.right).unwrap();
            for s in &m.only_left {
                writeln!(out, "  only {} {s}", m.left).unwrap();
            }
            for s in &m.only_right {
                writeln!(out, "  only {} {s}", m.right).unwrap();
            }
        }
        for (k, v) in self.timings_ms.iter().flatten() {
            writeln!(out, "time      {k} {v:.3} ms").unwrap();
        }
        writeln!(out, "verified  {}", self.verified).unwrap();
        out
    }
}
