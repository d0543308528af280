//! Scenario files: a TOML document naming a ring, a group, an action and a
//! list of tasks (or, for lattice scenarios, integer generator matrices).
//!
//! ```toml
//! schema = "kerind-scenario/1"
//! name = "f4-frobenius"
//! group = "cyclic:2"
//!
//! [ring]
//! atoms = ["(Z/2)[x]/(x^2+x+1)"]
//!
//! [[action]]          # one entry per group generator
//! rule = "frobenius"
//!
//! [[task]]
//! command = "h1"
//! levels = [1, 2]
//! ```
//!
//! Action entries take exactly one of `rule` (`identity`, `frobenius`,
//! `power:k`, or `x -> f(x)` applied to every factor), `atoms` (a list of
//! `{ target, image }` sending factor `i` to factor `target` with `x ↦ image`),
//! or `table` (the image of every element, in canonical order).

use std::sync::Arc;

use serde::Deserialize;

use crate::action::{ActionRule, RingAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::h1::{AbstractCoefficients, MatrixKind};
use crate::lattice::LatticeAction;
use crate::ring::{descriptor, AtomSpec, FiniteCommRing, DEFAULT_SIZE_BOUND};

pub const SCENARIO_SCHEMA: &str = "kerind-scenario/1";
pub const DEFAULT_CAP: usize = 1_000_000;
pub const DEFAULT_BOUND: usize = 3;
pub const DEFAULT_SAMPLES: usize = 500;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    schema: Option<String>,
    name: String,
    #[serde(default)]
    description: String,
    ring: Option<RawRing>,
    group: Option<RawGroup>,
    #[serde(default)]
    action: Vec<RawRule>,
    /// Demand an element of trace one (default: true).
    require_star: Option<bool>,
    coefficients: Option<RawAbstract>,
    lattice: Option<RawLattice>,
    #[serde(default)]
    task: Vec<RawTask>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    atoms: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawGroup {
    Shorthand(String),
    Table {
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRule {
    rule: Option<String>,
    atoms: Option<Vec<RawAtomImage>>,
    table: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAtomImage {
    target: usize,
    image: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAbstract {
    group: RawGroup,
    name: Option<String>,
    /// Per generator of `G`: the image of every element of `X`.
    #[serde(default)]
    action: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLattice {
    rank: usize,
    generators: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTask {
    command: String,
    levels: Option<Vec<usize>>,
    kind: Option<String>,
    cap: Option<usize>,
    bound: Option<usize>,
    samples: Option<usize>,
    #[serde(default)]
    monoid: bool,
    #[serde(default)]
    inflation: bool,
    subgroups: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    H1,
    Kernel,
    Oracle,
    VerifyTheorem,
    Pic,
    Coinvariants,
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::H1 => "h1",
            Command::Kernel => "kernel",
            Command::Oracle => "oracle",
            Command::VerifyTheorem => "verify-theorem",
            Command::Pic => "pic",
            Command::Coinvariants => "coinvariants",
            Command::All => "all",
        }
    }

    pub const CONCRETE: [Command; 6] =
        [Command::H1, Command::Kernel, Command::Oracle, Command::VerifyTheorem, Command::Pic, Command::Coinvariants];

    pub fn is_lattice(self) -> bool {
        matches!(self, Command::Pic | Command::Coinvariants)
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "h1" => Command::H1,
            "kernel" => Command::Kernel,
            "oracle" => Command::Oracle,
            "verify-theorem" => Command::VerifyTheorem,
            "pic" => Command::Pic,
            "coinvariants" => Command::Coinvariants,
            "all" => Command::All,
            other => return Err(Error::Validation(format!("unknown command {other:?}"))),
        })
    }
}

/// Parameters of one task.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Task {
    pub command: Command,
    pub levels: Vec<usize>,
    pub kind: MatrixKind,
    pub cap: usize,
    pub bound: usize,
    /// Random triples for the skew-ring associativity check.
    pub samples: usize,
    /// Also check the block-sum monoid laws (kernel).
    pub monoid: bool,
    /// Also run inflation–restriction over every proper nontrivial normal subgroup (h1).
    pub inflation: bool,
    /// Subgroups for coinvariants; all subgroups when absent.
    pub subgroups: Option<Vec<Vec<usize>>>,
}

impl Task {
    pub fn new(command: Command) -> Self {
        Task {
            command,
            levels: vec![1],
            kind: MatrixKind::General,
            cap: DEFAULT_CAP,
            bound: DEFAULT_BOUND,
            samples: DEFAULT_SAMPLES,
            monoid: false,
            inflation: false,
            subgroups: None,
        }
    }
}

/// What the scenario acts on.
#[derive(Clone, Debug)]
pub enum Subject {
    /// `G` acting on a finite commutative ring.
    Ring { action: Arc<RingAction>, abstract_coefficients: Option<Arc<AbstractCoefficients>> },
    /// `G` acting only on an abstract finite group.
    Abstract(Arc<AbstractCoefficients>),
    Lattice(LatticeAction),
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub description: String,
    pub subject: Subject,
    pub tasks: Vec<Task>,
}

impl Scenario {
    pub fn action(&self) -> Option<&Arc<RingAction>> {
        match &self.subject {
            Subject::Ring { action, .. } => Some(action),
            _ => None,
        }
    }

    pub fn abstract_coefficients(&self) -> Option<&Arc<AbstractCoefficients>> {
        match &self.subject {
            Subject::Ring { abstract_coefficients, .. } => abstract_coefficients.as_ref(),
            Subject::Abstract(c) => Some(c),
            Subject::Lattice(_) => None,
        }
    }

    pub fn lattice(&self) -> Option<&LatticeAction> {
        match &self.subject {
            Subject::Lattice(l) => Some(l),
            _ => None,
        }
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        parse_scenario(&std::fs::read_to_string(path)?)
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub fn parse_group(raw: &str) -> Result<FiniteGroup> {
    let (kind, arg) = raw.split_once(':').unwrap_or((raw, ""));
    let num = |s: &str| -> Result<usize> {
        s.trim().parse().map_err(|_| invalid(format!("bad group parameter {s:?} in {raw:?}")))
    };
    let list = |s: &str| -> Result<Vec<usize>> { s.split(',').map(num).collect() };
    let positive = |m: usize| if m == 0 { Err(invalid("group parameters must be positive")) } else { Ok(m) };
    match kind.trim() {
        "trivial" => Ok(FiniteGroup::trivial()),
        "cyclic" => Ok(FiniteGroup::cyclic(positive(num(arg)?)?)),
        "product" | "abelian" => {
            let orders = list(arg)?;
            orders.iter().try_for_each(|&m| positive(m).map(|_| ()))?;
            Ok(FiniteGroup::abelian(&orders))
        }
        "symmetric" => {
            let k = positive(num(arg)?)?;
            if k > 5 {
                return Err(invalid("symmetric groups above S_5 are not supported"));
            }
            Ok(FiniteGroup::symmetric(k))
        }
        "dihedral" => {
            let m = num(arg)?;
            if m < 2 {
                return Err(invalid("dihedral:m needs m ≥ 2"));
            }
            Ok(FiniteGroup::dihedral(m))
        }
        other => Err(invalid(format!("unknown group shorthand {other:?}"))),
    }
}

fn build_group(raw: RawGroup) -> Result<FiniteGroup> {
    match raw {
        RawGroup::Shorthand(s) => parse_group(&s),
        RawGroup::Table { table, generators, labels } => FiniteGroup::from_table(table, generators, labels),
    }
}

fn build_rule(ring: &FiniteCommRing, raw: RawRule, index: usize) -> Result<ActionRule> {
    let given = raw.rule.is_some() as u8 + raw.atoms.is_some() as u8 + raw.table.is_some() as u8;
    if given != 1 {
        return Err(invalid(format!("action entry {index}: give exactly one of rule, atoms, table")));
    }
    if let Some(table) = raw.table {
        let images = table.iter().map(|t| ring.parse_element(t)).collect::<Result<Vec<_>>>()?;
        if images.len() != ring.size() {
            return Err(invalid(format!("action entry {index}: table has {} entries, ring has {}", images.len(), ring.size())));
        }
        return Ok(ActionRule::Table(images));
    }
    if let Some(atoms) = raw.atoms {
        if atoms.len() != ring.atom_count() {
            return Err(invalid(format!("action entry {index}: {} atom images for {} factors", atoms.len(), ring.atom_count())));
        }
        let targets = atoms.iter().map(|a| a.target).collect();
        let images = atoms.iter().map(|a| descriptor::parse_poly(&a.image)).collect::<Result<Vec<_>>>()?;
        return Ok(ActionRule::AtomMap { targets, images });
    }
    let rule = raw.rule.unwrap();
    let r = rule.trim();
    if r == "identity" {
        return Ok(ActionRule::Identity);
    }
    if r == "frobenius" {
        return Ok(ActionRule::Frobenius);
    }
    if let Some(k) = r.strip_prefix("power:") {
        let k = k.trim().parse().map_err(|_| invalid(format!("bad exponent in {r:?}")))?;
        return Ok(ActionRule::Power(k));
    }
    let image = r
        .strip_prefix("x ->")
        .or_else(|| r.strip_prefix("x↦"))
        .or_else(|| r.strip_prefix("x ↦"))
        .or_else(|| r.strip_prefix("x->"))
        .ok_or_else(|| invalid(format!("action entry {index}: unknown rule {r:?}")))?;
    let poly = descriptor::parse_poly(image)?;
    let n = ring.atom_count();
    Ok(ActionRule::AtomMap { targets: (0..n).collect(), images: vec![poly; n] })
}

fn build_task(raw: RawTask) -> Result<Task> {
    let mut task = Task::new(raw.command.parse()?);
    if let Some(levels) = raw.levels {
        if levels.is_empty() || levels.contains(&0) {
            return Err(invalid("levels must be a nonempty list of positive integers"));
        }
        task.levels = levels;
    }
    task.kind = match raw.kind.as_deref() {
        None | Some("GL") => MatrixKind::General,
        Some("SL") => MatrixKind::Special,
        Some(other) => return Err(invalid(format!("unknown coefficient kind {other:?}"))),
    };
    for (value, slot) in [(raw.cap, &mut task.cap), (raw.bound, &mut task.bound), (raw.samples, &mut task.samples)] {
        if let Some(v) = value {
            if v == 0 {
                return Err(invalid("caps, bounds and sample counts must be positive"));
            }
            *slot = v;
        }
    }
    task.monoid = raw.monoid;
    task.inflation = raw.inflation;
    task.subgroups = raw.subgroups;
    Ok(task)
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let raw: RawScenario = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_column(text, s.start));
        Error::Parse { line, column, message: e.message().to_string() }
    })?;
    if let Some(schema) = &raw.schema {
        if schema != SCENARIO_SCHEMA {
            return Err(invalid(format!("unsupported schema {schema:?}, expected {SCENARIO_SCHEMA:?}")));
        }
    }
    let tasks = raw.task.into_iter().map(build_task).collect::<Result<Vec<_>>>()?;

    let subject = if let Some(lat) = raw.lattice {
        if raw.ring.is_some() || raw.coefficients.is_some() || !raw.action.is_empty() {
            return Err(invalid("lattice scenarios carry generator matrices instead of ring data"));
        }
        if raw.group.is_some() {
            return Err(invalid("the group of a lattice scenario is generated by its matrices"));
        }
        Subject::Lattice(LatticeAction::from_generators(lat.rank, &lat.generators)?)
    } else {
        let group = Arc::new(match raw.group {
            Some(g) => build_group(g)?,
            None => return Err(invalid("missing group")),
        });
        let abstract_coefficients = match raw.coefficients {
            Some(c) => {
                let x = Arc::new(build_group(c.group)?);
                let name = c.name.unwrap_or_else(|| "X".into());
                Some(if c.action.is_empty() {
                    AbstractCoefficients::trivial(Arc::clone(&group), x, name)
                } else {
                    AbstractCoefficients::from_generators(Arc::clone(&group), x, c.action, name)?
                })
            }
            None => None,
        };
        match raw.ring {
            Some(ring) => {
                let specs = ring.atoms.iter().map(|a| AtomSpec::parse(a)).collect::<Result<Vec<_>>>()?;
                let ring = FiniteCommRing::build(&specs, DEFAULT_SIZE_BOUND)?;
                let rules = if raw.action.is_empty() {
                    vec![ActionRule::Identity; group.generators().len()]
                } else {
                    let n = raw.action.len();
                    if n != group.generators().len() {
                        return Err(invalid(format!(
                            "{n} action entries for {} group generators",
                            group.generators().len()
                        )));
                    }
                    raw.action
                        .into_iter()
                        .enumerate()
                        .map(|(i, r)| build_rule(&ring, r, i))
                        .collect::<Result<Vec<_>>>()?
                };
                let action = RingAction::from_rules(group, ring, &rules, raw.require_star.unwrap_or(true))?;
                Subject::Ring { action, abstract_coefficients }
            }
            None => match abstract_coefficients {
                Some(c) => Subject::Abstract(c),
                None => return Err(invalid("scenario needs a ring, abstract coefficients, or a lattice")),
            },
        }
    };
    for task in &tasks {
        let lattice = matches!(subject, Subject::Lattice(_));
        if task.command != Command::All && task.command.is_lattice() != lattice && task.command != Command::H1 {
            return Err(invalid(format!("command {} does not apply to this scenario", task.command.name())));
        }
    }
    Ok(Scenario { name: raw.name, description: raw.description, subject, tasks })
}
