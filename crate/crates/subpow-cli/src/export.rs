//! Output renderings: DOT and JSON for subset power graphs, JSON, CSV,
//! and a padded table for cycle spectra. JSON and CSV layouts are
//! stable contracts; the table is for reading, not parsing.

use serde::{Deserialize, Serialize};
use subpow::{CycleSpectrum, SubsetPowerGraph};

/// JSON form of a subset power graph. `vertices[i]` lists the members
/// of subset vertex i; `edges` pairs indices into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub base_l: usize,
    pub d: usize,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl From<&SubsetPowerGraph> for GraphJson {
    fn from(power: &SubsetPowerGraph) -> Self {
        GraphJson {
            base_l: power.base().vertex_count(),
            d: power.d(),
            vertices: power
                .vertices()
                .iter()
                .map(|a| a.members().to_vec())
                .collect(),
            edges: power.graph().edges().collect(),
        }
    }
}

/// JSON form of a cycle spectrum; counts are decimal strings because
/// they outgrow fixed-width integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub l: usize,
    pub d: usize,
    pub cycles: Vec<CycleCountJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCountJson {
    pub k: usize,
    pub count: String,
}

impl From<&CycleSpectrum> for SpectrumJson {
    fn from(s: &CycleSpectrum) -> Self {
        SpectrumJson {
            l: s.l(),
            d: s.d(),
            cycles: s
                .counts()
                .iter()
                .map(|(&k, count)| CycleCountJson {
                    k,
                    count: count.to_string(),
                })
                .collect(),
        }
    }
}

/// DOT rendering with one node per subset, labeled `{a1,a2,...}`.
pub fn graph_to_dot(power: &SubsetPowerGraph) -> String {
    let mut out = String::from("digraph subset_power {\n");
    for (i, a) in power.vertices().iter().enumerate() {
        out.push_str(&format!("  {i} [label=\"{a}\"];\n"));
    }
    for (u, v) in power.graph().edges() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_json(power: &SubsetPowerGraph) -> String {
    let mut out =
        serde_json::to_string(&GraphJson::from(power)).expect("graph serialization cannot fail");
    out.push('\n');
    out
}

pub fn spectrum_to_json(s: &CycleSpectrum) -> String {
    let mut out =
        serde_json::to_string(&SpectrumJson::from(s)).expect("spectrum serialization cannot fail");
    out.push('\n');
    out
}

pub fn spectrum_to_csv(s: &CycleSpectrum) -> String {
    let mut out = String::from("k,count\n");
    for (k, count) in s.counts() {
        out.push_str(&format!("{k},{count}\n"));
    }
    out
}

pub fn spectrum_to_table(s: &CycleSpectrum) -> String {
    let k_width = s
        .counts()
        .keys()
        .map(|k| k.to_string().len())
        .chain([1])
        .max()
        .unwrap();
    let mut out = format!("{:<k_width$}  count\n", "k");
    for (k, count) in s.counts() {
        out.push_str(&format!("{k:<k_width$}  {count}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use subpow::{build_subset_power, make_cycle, spectrum};

    #[test]
    fn dot_for_pair_subsets_of_c4() {
        let power = build_subset_power(&make_cycle(4).unwrap(), 2).unwrap();
        let dot = graph_to_dot(&power);
        assert!(dot.starts_with("digraph subset_power {\n"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("  0 [label=\"{0,1}\"];\n"));
        assert_eq!(dot.matches("label").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 6);
    }

    #[test]
    fn graph_json_fields() {
        let power = build_subset_power(&make_cycle(3).unwrap(), 1).unwrap();
        let json = GraphJson::from(&power);
        assert_eq!(json.base_l, 3);
        assert_eq!(json.d, 1);
        assert_eq!(json.vertices, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(json.edges, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn spectrum_renderings() {
        let s = spectrum(6, 2).unwrap();
        assert_eq!(
            spectrum_to_json(&s),
            "{\"l\":6,\"d\":2,\"cycles\":[{\"k\":3,\"count\":\"1\"},{\"k\":6,\"count\":\"2\"}]}\n"
        );
        assert_eq!(spectrum_to_csv(&s), "k,count\n3,1\n6,2\n");
        assert_eq!(spectrum_to_table(&s), "k  count\n3  1\n6  2\n");
    }

    #[test]
    fn json_round_trips() {
        let power = build_subset_power(&make_cycle(5).unwrap(), 2).unwrap();
        let text = graph_to_json(&power);
        let parsed: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);

        let s = spectrum(12, 4).unwrap();
        let text = spectrum_to_json(&s);
        let parsed: SpectrumJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);
    }
}
