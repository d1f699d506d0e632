//! Scenario files: a line-oriented, sectioned `key = value` format.
//!
//! ```text
//! # comments start with '#'
//! [scenario]
//! variant = ID2
//! volume_multiplier = 1.5
//!
//! [classes]
//! car.a_max = 2.2
//!
//! [thresholds]
//! critical_gap = 3.5
//! lane_change.mandatory_zone = 120
//!
//! [demand]
//! route.6 = 200
//! ```
//!
//! Sections are `scenario`, `classes`, `ghr`, `thresholds` and `demand`.
//! Keys left out keep their defaults, unknown sections or keys and repeated
//! keys are errors. If a class gets a new `length` but no `effective_length`,
//! the effective length follows the length plus the standard standstill
//! buffer. [`serialize_scenario`] writes every key, sections in the order
//! above and keys sorted, with floats in shortest round-trip form.

use std::collections::BTreeMap;
use std::fmt::Write;

use forksim_core::network::{InfraVariant, RoadNetwork};
use forksim_core::scenario::Scenario;
use forksim_core::types::{VehicleClass, VehicleKind, DEFAULT_STANDSTILL_BUFFER};
use forksim_core::ConfigError;
use thiserror::Error;

pub const SECTIONS: [&str; 5] = ["scenario", "classes", "ghr", "thresholds", "demand"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioFileError {
    #[error("invalid UTF-8 at byte {offset}")]
    Utf8 { offset: usize },

    #[error("line {line}: {kind}")]
    Syntax { line: usize, kind: SyntaxError },

    #[error("line {line}: {source}")]
    Value {
        line: usize,
        #[source]
        source: ConfigError,
    },

    #[error("invalid scenario: {0}")]
    Invalid(#[from] ConfigError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SyntaxError {
    #[error("expected `key = value`")]
    MissingEquals,
    #[error("malformed section header")]
    BadHeader,
    #[error("unknown section [{0}]")]
    UnknownSection(String),
    #[error("section [{name}] repeated (first on line {first})")]
    DuplicateSection { name: String, first: usize },
    #[error("key `{0}` outside of any section")]
    KeyOutsideSection(String),
    #[error("unknown key `{key}` in [{section}]")]
    UnknownKey { section: String, key: String },
    #[error("duplicate key `{key}` (first on line {first})")]
    DuplicateKey { key: String, first: usize },
    #[error("missing value for `{0}`")]
    EmptyValue(String),
    #[error("`{key}`: `{value}` is not a number")]
    BadNumber { key: String, value: String },
    #[error("`{key}`: `{value}` is not a non-negative integer in range")]
    BadInteger { key: String, value: String },
    #[error("`{0}` must be finite")]
    NonFinite(String),
}

type F64Field = fn(&mut Scenario) -> &mut f64;
type ClassField = fn(&mut VehicleClass) -> &mut f64;

const SCENARIO_F64: [(&str, F64Field); 7] = [
    ("volume_multiplier", |s| &mut s.volume_multiplier),
    ("duration", |s| &mut s.duration),
    ("warmup", |s| &mut s.warmup),
    ("dt", |s| &mut s.dt),
    ("legal_speed", |s| &mut s.legal_speed),
    ("lane_width", |s| &mut s.lane_width),
    ("zone_approach_tail", |s| &mut s.zone_approach_tail),
];

const CLASS_F64: [(&str, ClassField); 10] = [
    ("length", |c| &mut c.length),
    ("width", |c| &mut c.width),
    ("effective_length", |c| &mut c.effective_length),
    ("a_max", |c| &mut c.a_max),
    ("a_normal", |c| &mut c.a_normal),
    ("a_emergency", |c| &mut c.a_emergency),
    ("desired_speed_mean", |c| &mut c.desired_speed_mean),
    ("desired_speed_sd", |c| &mut c.desired_speed_sd),
    ("reaction_time", |c| &mut c.reaction_time),
    ("share", |c| &mut c.share),
];

const GHR_F64: [(&str, F64Field); 6] = [
    ("r_plus", |s| &mut s.ghr.r_plus),
    ("s_plus", |s| &mut s.ghr.s_plus),
    ("t_plus", |s| &mut s.ghr.t_plus),
    ("r_minus", |s| &mut s.ghr.r_minus),
    ("s_minus", |s| &mut s.ghr.s_minus),
    ("t_minus", |s| &mut s.ghr.t_minus),
];

const THRESHOLD_F64: [(&str, F64Field); 14] = [
    ("critical_gap", |s| &mut s.thresholds.critical_gap),
    ("entry_buffer", |s| &mut s.thresholds.entry_buffer),
    ("entry_decision_distance", |s| &mut s.thresholds.entry_decision_distance),
    ("stop_speed", |s| &mut s.thresholds.stop_speed),
    ("scan_horizon", |s| &mut s.thresholds.scan_horizon),
    ("state.horizon_factor", |s| &mut s.thresholds.state.horizon_factor),
    ("state.min_follow_distance", |s| &mut s.thresholds.state.min_follow_distance),
    ("state.moving_speed", |s| &mut s.thresholds.state.moving_speed),
    ("lane_change.lead_headway", |s| &mut s.thresholds.lane_change.lead_headway),
    ("lane_change.lag_headway", |s| &mut s.thresholds.lane_change.lag_headway),
    ("lane_change.lag_buffer", |s| &mut s.thresholds.lane_change.lag_buffer),
    ("lane_change.speed_gain", |s| &mut s.thresholds.lane_change.speed_gain),
    ("lane_change.mandatory_zone", |s| &mut s.thresholds.lane_change.mandatory_zone),
    ("lane_change.discretionary_cutoff", |s| &mut s.thresholds.lane_change.discretionary_cutoff),
];

const DEMAND_F64: [(&str, F64Field); 7] = [
    ("horizon", |s| &mut s.demand_horizon),
    ("route.1", |s| &mut s.route_counts[0]),
    ("route.2", |s| &mut s.route_counts[1]),
    ("route.3", |s| &mut s.route_counts[2]),
    ("route.4", |s| &mut s.route_counts[3]),
    ("route.5", |s| &mut s.route_counts[4]),
    ("route.6", |s| &mut s.route_counts[5]),
];

fn f64_fields(section: &str) -> &'static [(&'static str, F64Field)] {
    match section {
        "scenario" => &SCENARIO_F64,
        "ghr" => &GHR_F64,
        "thresholds" => &THRESHOLD_F64,
        "demand" => &DEMAND_F64,
        _ => &[],
    }
}

/// Parses and validates a scenario file, then builds its network.
pub fn parse_scenario(text: &str) -> Result<(Scenario, RoadNetwork), ScenarioFileError> {
    let scenario = parse_unchecked(text)?;
    scenario.validate()?;
    let network = scenario.network()?;
    Ok((scenario, network))
}

/// [`parse_scenario`] over raw bytes.
pub fn parse_scenario_bytes(bytes: &[u8]) -> Result<(Scenario, RoadNetwork), ScenarioFileError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ScenarioFileError::Utf8 {
        offset: e.valid_up_to(),
    })?;
    parse_scenario(text)
}

/// Applies the file over the defaults without running the invariant checks.
pub fn parse_unchecked(text: &str) -> Result<Scenario, ScenarioFileError> {
    let mut s = Scenario::default();
    let mut section: Option<String> = None;
    let mut sections_seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut keys_seen: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut lengths_set = [false; 8];
    let mut effective_set = [false; 8];

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |kind| ScenarioFileError::Syntax { line, kind };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix('[') {
            let name = rest.strip_suffix(']').map(str::trim).ok_or_else(|| syntax(SyntaxError::BadHeader))?;
            if !SECTIONS.contains(&name) {
                return Err(syntax(SyntaxError::UnknownSection(name.to_string())));
            }
            if let Some(first) = sections_seen.insert(name.to_string(), line) {
                return Err(syntax(SyntaxError::DuplicateSection {
                    name: name.to_string(),
                    first,
                }));
            }
            section = Some(name.to_string());
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| syntax(SyntaxError::MissingEquals))?;
        let (key, value) = (key.trim(), value.trim());
        let Some(sec) = section.as_deref() else {
            return Err(syntax(SyntaxError::KeyOutsideSection(key.to_string())));
        };
        if key.is_empty() {
            return Err(syntax(SyntaxError::MissingEquals));
        }
        if let Some(first) = keys_seen.insert((sec.to_string(), key.to_string()), line) {
            return Err(syntax(SyntaxError::DuplicateKey {
                key: key.to_string(),
                first,
            }));
        }
        if value.is_empty() {
            return Err(syntax(SyntaxError::EmptyValue(key.to_string())));
        }
        let unknown = || {
            syntax(SyntaxError::UnknownKey {
                section: sec.to_string(),
                key: key.to_string(),
            })
        };

        match (sec, key) {
            ("scenario", "variant") => {
                s.variant = value
                    .parse::<InfraVariant>()
                    .map_err(|source| ScenarioFileError::Value { line, source })?;
            }
            ("scenario", "seed") => s.seed = parse_int(key, value).map_err(syntax)?,
            ("scenario", "replications") => s.replications = parse_int(key, value).map_err(syntax)?,
            ("scenario", "check_interval") => s.check_interval = parse_int(key, value).map_err(syntax)?,
            ("classes", _) => {
                let (kind, field) = key.split_once('.').ok_or_else(unknown)?;
                let kind: VehicleKind = kind.parse().map_err(|_| unknown())?;
                let (_, get) = CLASS_F64.iter().find(|(n, _)| *n == field).ok_or_else(unknown)?;
                *get(s.classes.get_mut(kind)) = parse_f64(key, value).map_err(syntax)?;
                match field {
                    "length" => lengths_set[kind.index()] = true,
                    "effective_length" => effective_set[kind.index()] = true,
                    _ => {}
                }
            }
            _ => {
                let (_, get) = f64_fields(sec).iter().find(|(n, _)| *n == key).ok_or_else(unknown)?;
                *get(&mut s) = parse_f64(key, value).map_err(syntax)?;
            }
        }
    }

    for kind in VehicleKind::ALL {
        if lengths_set[kind.index()] && !effective_set[kind.index()] {
            let c = s.classes.get_mut(kind);
            c.effective_length = c.length + DEFAULT_STANDSTILL_BUFFER;
        }
    }
    Ok(s)
}

fn parse_f64(key: &str, value: &str) -> Result<f64, SyntaxError> {
    let v: f64 = value.parse().map_err(|_| SyntaxError::BadNumber {
        key: key.to_string(),
        value: value.to_string(),
    })?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(SyntaxError::NonFinite(key.to_string()))
    }
}

fn parse_int<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, SyntaxError> {
    value.parse().map_err(|_| SyntaxError::BadInteger {
        key: key.to_string(),
        value: value.to_string(),
    })
}

/// Writes every key of `scenario`; parsing the result gives `scenario` back.
pub fn serialize_scenario(scenario: &Scenario) -> String {
    let mut s = scenario.clone();
    let mut out = String::new();
    for section in SECTIONS {
        let mut entries: Vec<(String, String)> = Vec::new();
        for (key, get) in f64_fields(section) {
            entries.push((key.to_string(), format!("{:?}", *get(&mut s))));
        }
        match section {
            "scenario" => {
                entries.push(("variant".into(), s.variant.name().into()));
                entries.push(("seed".into(), s.seed.to_string()));
                entries.push(("replications".into(), s.replications.to_string()));
                entries.push(("check_interval".into(), s.check_interval.to_string()));
            }
            "classes" => {
                for kind in VehicleKind::ALL {
                    for (field, get) in &CLASS_F64 {
                        let v = *get(s.classes.get_mut(kind));
                        entries.push((format!("{}.{field}", kind.name()), format!("{v:?}")));
                    }
                }
            }
            _ => {}
        }
        entries.sort();
        let _ = writeln!(out, "[{section}]");
        for (k, v) in entries {
            let _ = writeln!(out, "{k} = {v}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_file_is_the_default() {
        let (s, n) = parse_scenario("").unwrap();
        assert_eq!(s, Scenario::default());
        assert_eq!(n.variant, InfraVariant::Id0);
    }

    #[test]
    fn minimal_file_applies_defaults() {
        let (s, _) = parse_scenario("[scenario]\nvariant = ID0\nvolume_multiplier = 1.0\n").unwrap();
        assert_eq!(s, Scenario::default());
    }

    #[test]
    fn keys_override_defaults() {
        let text = "\
# header comment
[scenario]
variant = id3   # case does not matter
seed = 77
[classes]
bus.length = 12.0
car.a_max = 2.2
[thresholds]
lane_change.mandatory_zone = 120
[demand]
route.6 = 200
";
        let (s, n) = parse_scenario(text).unwrap();
        assert_eq!(s.variant, InfraVariant::Id3);
        assert_eq!(n.variant, InfraVariant::Id3);
        assert_eq!(s.seed, 77);
        assert_eq!(s.classes.get(VehicleKind::Bus).length, 12.0);
        assert_eq!(s.classes.get(VehicleKind::Bus).effective_length, 13.0);
        assert_eq!(s.classes.get(VehicleKind::Car).a_max, 2.2);
        assert_eq!(s.thresholds.lane_change.mandatory_zone, 120.0);
        assert_eq!(s.route_counts[5], 200.0);
    }

    #[test]
    fn negative_multiplier_names_the_invariant() {
        let e = parse_scenario("[scenario]\nvolume_multiplier = -1\n").unwrap_err();
        assert_eq!(e.to_string(), "invalid scenario: volume multiplier must be >= 0");
    }

    #[test]
    fn unknown_variant_is_rejected() {
        let e = parse_scenario("[scenario]\nvariant = ID4\n").unwrap_err();
        assert!(matches!(e, ScenarioFileError::Value { line: 2, .. }), "{e}");
        assert!(e.to_string().contains("ID4"));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("[scenario]\nseed 4\n", 2, "expected `key = value`"),
            ("seed = 4\n", 1, "outside of any section"),
            ("[scenario]\n[bogus]\n", 2, "unknown section [bogus]"),
            ("[ghr]\nr_plus = 1\nr_plus = 2\n", 3, "duplicate key `r_plus` (first on line 2)"),
            ("[ghr]\nq = 1\n", 2, "unknown key `q` in [ghr]"),
            ("[classes]\ntruck.length = 1\n", 2, "unknown key `truck.length`"),
            ("[ghr]\nr_plus = fast\n", 2, "is not a number"),
            ("[ghr]\nr_plus = inf\n", 2, "must be finite"),
            ("[scenario]\nseed = -3\n", 2, "non-negative integer"),
            ("[scenario\n", 1, "malformed section header"),
            ("[ghr]\n[ghr]\n", 2, "repeated"),
            ("[ghr]\nr_plus =\n", 2, "missing value"),
        ];
        for (text, line, msg) in cases {
            let e = parse_scenario(text).unwrap_err();
            let shown = e.to_string();
            assert!(shown.starts_with(&format!("line {line}: ")), "{shown}");
            assert!(shown.contains(msg), "{shown} lacks {msg}");
        }
    }

    #[test]
    fn invalid_utf8_is_a_diagnostic() {
        let e = parse_scenario_bytes(b"[scenario]\nseed = 1\xff\n").unwrap_err();
        assert_eq!(e, ScenarioFileError::Utf8 { offset: 19 });
    }

    #[test]
    fn default_round_trip() {
        let text = serialize_scenario(&Scenario::default());
        assert_eq!(parse_unchecked(&text).unwrap(), Scenario::default());
        assert_eq!(serialize_scenario(&parse_unchecked(&text).unwrap()), text);
    }

    fn scenario_strategy() -> impl Strategy<Value = Scenario> {
        (
            prop::sample::select(InfraVariant::ALL.to_vec()),
            0.0f64..3.0,
            any::<u64>(),
            1u32..30,
            0.01f64..0.5,
            prop::array::uniform6(0.0f64..2000.0),
            0.5f64..3.0,
            1.0f64..20.0,
            prop::array::uniform8(1.0f64..15.0),
        )
            .prop_map(|(variant, m, seed, reps, dt, counts, r_plus, gap, lengths)| {
                let mut s = Scenario {
                    variant,
                    volume_multiplier: m,
                    seed,
                    replications: reps,
                    dt,
                    route_counts: counts,
                    ..Scenario::default()
                };
                s.ghr.r_plus = r_plus;
                s.thresholds.critical_gap = gap;
                for (c, l) in s.classes.0.iter_mut().zip(lengths) {
                    c.length = l;
                    c.effective_length = l + 0.75;
                }
                s
            })
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(s in scenario_strategy()) {
            let text = serialize_scenario(&s);
            let (back, _) = parse_scenario(&text).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(serialize_scenario(&back), text);
        }

        #[test]
        fn parser_is_total(bytes in prop::collection::vec(any::<u8>(), 0..400)) {
            let _ = parse_scenario_bytes(&bytes);
        }

        #[test]
        fn parser_is_total_on_near_miss_text(lines in prop::collection::vec(
            prop::sample::select(vec![
                "[scenario]", "[classes]", "[ghr]", "[thresholds]", "[demand]", "[", "]", "=",
                "seed = 9", "seed = 99999999999999999999999", "dt = 0", "dt = 1e308",
                "variant = ID1", "variant = ", "car.length = 0.5", "bus.share = 2",
                "route.3 = -1", "horizon = nan", "replications = 0", "# c", "",
                "state.horizon_factor = 0.5", "lane_change.speed_gain = 1e-9",
            ]),
            0..12,
        )) {
            let text = lines.join("\n");
            let _ = parse_scenario(&text);
        }
    }
}
