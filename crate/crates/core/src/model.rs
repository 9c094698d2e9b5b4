//! Core vocabulary for component-based diagnosis: value domains, parameters,
//! behavioral modes, constraints, and diagnostic problems.
//!
//! A [`SystemModel`] is built up (by the DSL parser or programmatically) and
//! then checked with [`SystemModel::validate`]. Everything downstream (the
//! solver, the diagnoser) assumes a validated model and an immutable one:
//! all mutation happens before validation.

use std::collections::BTreeSet;
use std::fmt;

/// Name of the builtin three-valued sign domain.
pub const SIGN_DOMAIN: &str = "Sign";
/// Name of the builtin magnitude-comparison domain attached to sign operators.
pub const MAGNITUDE_DOMAIN: &str = "Magnitude";

/// A named, ordered, finite set of symbolic values.
///
/// The declaration order of `values` is fixed and used everywhere a
/// deterministic ordering is needed (enumeration, reports, serialization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub name: String,
    pub values: Vec<String>,
}

impl Domain {
    pub fn new(name: impl Into<String>, values: &[&str]) -> Self {
        Domain {
            name: name.into(),
            values: values.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// Index of `value` in this domain, or `None` if it is not a member.
    pub fn value_index(&self, value: &str) -> Option<usize> {
        self.values.iter().position(|v| v == value)
    }

    /// Like [`Domain::value_index`] but accepting the `-`/`0`/`+` input
    /// aliases for the builtin sign domain.
    pub fn resolve_value(&self, value: &str) -> Option<usize> {
        if let Some(idx) = self.value_index(value) {
            return Some(idx);
        }
        if self.name == SIGN_DOMAIN {
            let canonical = match value {
                "-" => "minus",
                "0" => "zero",
                "+" => "plus",
                _ => return None,
            };
            return self.value_index(canonical);
        }
        None
    }
}

/// What a parameter is for, from the diagnoser's point of view.
///
/// Context parameters are fixed by the problem's context section, observables
/// are the only legal targets of observations, internals are neither, and
/// assumables exist only to be bound during abductive refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Context,
    Observable,
    Internal,
    Assumable,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::Context => "context",
            Role::Observable => "observable",
            Role::Internal => "internal",
            Role::Assumable => "assumable",
        }
    }
}

/// A named variable with a finite value domain and exactly one role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    pub name: String,
    pub domain: String,
    pub role: Role,
}

impl Parameter {
    pub fn new(name: impl Into<String>, domain: impl Into<String>, role: Role) -> Self {
        Parameter {
            name: name.into(),
            domain: domain.into(),
            role,
        }
    }
}

/// A single constraint over parameters, referenced by name.
///
/// Name references are resolved (and checked) by [`SystemModel::validate`];
/// an unresolved name is a violation, not a construction failure, so that
/// half-built models can be inspected and reported on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// Extensional relation: the scope tuple must be one of `tuples`.
    Relation {
        scope: Vec<String>,
        tuples: Vec<Vec<String>>,
    },
    /// `param == value` for a constant of the parameter's domain.
    EqConst { param: String, value: String },
    /// `left == right` for two parameters over the same domain.
    EqParam { left: String, right: String },
    /// `c = a ⊕ b` in the sign algebra, optionally disambiguated by a
    /// magnitude assumable comparing `|a|` with `|b|`.
    SignSum {
        a: String,
        b: String,
        c: String,
        magnitude: Option<String>,
    },
    /// `c = a ⊖ b` in the sign algebra, same magnitude convention.
    SignSub {
        a: String,
        b: String,
        c: String,
        magnitude: Option<String>,
    },
}

impl Constraint {
    /// Every parameter name mentioned by this constraint, scope order first.
    pub fn referenced_params(&self) -> Vec<&str> {
        match self {
            Constraint::Relation { scope, .. } => scope.iter().map(String::as_str).collect(),
            Constraint::EqConst { param, .. } => vec![param],
            Constraint::EqParam { left, right } => vec![left, right],
            Constraint::SignSum { a, b, c, magnitude }
            | Constraint::SignSub { a, b, c, magnitude } => {
                let mut refs = vec![a.as_str(), b.as_str(), c.as_str()];
                if let Some(m) = magnitude {
                    refs.push(m);
                }
                refs
            }
        }
    }
}

/// One behavioral mode of a component and the constraints it activates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mode {
    pub name: String,
    pub constraints: Vec<Constraint>,
}

/// A component with mutually exclusive behavioral modes.
///
/// The first declared mode is conventionally the nominal one; fault counting
/// in the diagnoser relies on that convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub modes: Vec<Mode>,
}

impl Component {
    pub fn mode_index(&self, name: &str) -> Option<usize> {
        self.modes.iter().position(|m| m.name == name)
    }
}

/// The complete model: domains, parameters, components, and the structural
/// constraints that are active regardless of mode assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemModel {
    pub domains: Vec<Domain>,
    pub parameters: Vec<Parameter>,
    pub components: Vec<Component>,
    pub always: Vec<Constraint>,
}

impl Default for SystemModel {
    fn default() -> Self {
        Self::new()
    }
}

impl SystemModel {
    /// An empty model carrying only the builtin domains.
    pub fn new() -> Self {
        SystemModel {
            domains: vec![
                Domain::new(SIGN_DOMAIN, &["minus", "zero", "plus"]),
                Domain::new(MAGNITUDE_DOMAIN, &["lt", "eq", "gt"]),
            ],
            parameters: Vec::new(),
            components: Vec::new(),
            always: Vec::new(),
        }
    }

    pub fn is_builtin_domain(name: &str) -> bool {
        name == SIGN_DOMAIN || name == MAGNITUDE_DOMAIN
    }

    pub fn domain(&self, name: &str) -> Option<&Domain> {
        self.domains.iter().find(|d| d.name == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.parameters.iter().position(|p| p.name == name)
    }

    pub fn param(&self, name: &str) -> Option<&Parameter> {
        self.parameters.iter().find(|p| p.name == name)
    }

    /// Domain of the parameter at `idx`, if it resolves.
    pub fn param_domain(&self, idx: usize) -> Option<&Domain> {
        self.parameters.get(idx).and_then(|p| self.domain(&p.domain))
    }

    pub fn component_index(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c.name == name)
    }

    /// Indices of parameters with the given role, in declaration order.
    pub fn params_with_role(&self, role: Role) -> Vec<usize> {
        self.parameters
            .iter()
            .enumerate()
            .filter(|(_, p)| p.role == role)
            .map(|(i, _)| i)
            .collect()
    }

    /// Checks every structural invariant and returns the violations found.
    /// A valid model yields the empty list. Pure: calling it twice on the
    /// same model yields identical lists.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        let mut seen_domains: BTreeSet<&str> = BTreeSet::new();
        for d in &self.domains {
            if !seen_domains.insert(&d.name) {
                out.push(Violation::new(
                    ViolationKind::DuplicateDomain,
                    format!("domain {}", d.name),
                    d.name.clone(),
                ));
            }
            if d.values.is_empty() {
                out.push(Violation::new(
                    ViolationKind::EmptyDomain,
                    format!("domain {}", d.name),
                    String::new(),
                ));
            }
            let mut seen_values: BTreeSet<&str> = BTreeSet::new();
            for v in &d.values {
                if !seen_values.insert(v) {
                    out.push(Violation::new(
                        ViolationKind::DuplicateValue,
                        format!("domain {}", d.name),
                        v.clone(),
                    ));
                }
            }
        }

        let mut seen_params: BTreeSet<&str> = BTreeSet::new();
        for p in &self.parameters {
            if !seen_params.insert(&p.name) {
                out.push(Violation::new(
                    ViolationKind::DuplicateParameter,
                    format!("parameter {}", p.name),
                    p.name.clone(),
                ));
            }
            if self.domain(&p.domain).is_none() {
                out.push(Violation::new(
                    ViolationKind::UndeclaredDomain,
                    format!("parameter {}", p.name),
                    p.domain.clone(),
                ));
            }
        }

        if self.components.is_empty() {
            out.push(Violation::new(
                ViolationKind::NoComponents,
                "model".to_string(),
                String::new(),
            ));
        }
        let mut seen_components: BTreeSet<&str> = BTreeSet::new();
        for comp in &self.components {
            if !seen_components.insert(&comp.name) {
                out.push(Violation::new(
                    ViolationKind::DuplicateComponent,
                    format!("component {}", comp.name),
                    comp.name.clone(),
                ));
            }
            if comp.modes.is_empty() {
                out.push(Violation::new(
                    ViolationKind::NoModes,
                    format!("component {}", comp.name),
                    String::new(),
                ));
            }
            let mut seen_modes: BTreeSet<&str> = BTreeSet::new();
            for mode in &comp.modes {
                if !seen_modes.insert(&mode.name) {
                    out.push(Violation::new(
                        ViolationKind::DuplicateMode,
                        format!("component {}", comp.name),
                        mode.name.clone(),
                    ));
                }
                for c in &mode.constraints {
                    self.validate_constraint(
                        c,
                        &format!("component {}, mode {}", comp.name, mode.name),
                        &mut out,
                    );
                }
            }
        }

        for (i, c) in self.always.iter().enumerate() {
            self.validate_constraint(c, &format!("always #{}", i + 1), &mut out);
        }

        out
    }

    fn validate_constraint(&self, c: &Constraint, location: &str, out: &mut Vec<Violation>) {
        let mut resolved = true;
        for name in c.referenced_params() {
            if self.param_index(name).is_none() {
                out.push(Violation::new(
                    ViolationKind::UndeclaredParameter,
                    location.to_string(),
                    name.to_string(),
                ));
                resolved = false;
            }
        }
        if !resolved {
            return;
        }
        match c {
            Constraint::Relation { scope, tuples } => {
                for tuple in tuples {
                    if tuple.len() != scope.len() {
                        out.push(Violation::new(
                            ViolationKind::ArityMismatch,
                            location.to_string(),
                            format!("({})", tuple.join(",")),
                        ));
                        continue;
                    }
                    for (pos, value) in tuple.iter().enumerate() {
                        let param = self.param(&scope[pos]).expect("resolved above");
                        match self.domain(&param.domain) {
                            // Missing domain is already reported on the parameter.
                            None => {}
                            Some(d) => {
                                if d.value_index(value).is_none() {
                                    out.push(Violation::new(
                                        ViolationKind::ValueOutsideDomain,
                                        location.to_string(),
                                        format!("{} has no value {}", d.name, value),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            Constraint::EqConst { param, value } => {
                let p = self.param(param).expect("resolved above");
                if let Some(d) = self.domain(&p.domain) {
                    if d.value_index(value).is_none() {
                        out.push(Violation::new(
                            ViolationKind::ValueOutsideDomain,
                            location.to_string(),
                            format!("{} has no value {}", d.name, value),
                        ));
                    }
                }
            }
            Constraint::EqParam { left, right } => {
                let l = self.param(left).expect("resolved above");
                let r = self.param(right).expect("resolved above");
                if l.domain != r.domain {
                    out.push(Violation::new(
                        ViolationKind::DomainMismatch,
                        location.to_string(),
                        format!("{} : {} vs {} : {}", left, l.domain, right, r.domain),
                    ));
                }
            }
            Constraint::SignSum { a, b, c, magnitude }
            | Constraint::SignSub { a, b, c, magnitude } => {
                for name in [a, b, c] {
                    let p = self.param(name).expect("resolved above");
                    if p.domain != SIGN_DOMAIN {
                        out.push(Violation::new(
                            ViolationKind::DomainMismatch,
                            location.to_string(),
                            format!("{} : {} is not {}", name, p.domain, SIGN_DOMAIN),
                        ));
                    }
                }
                if let Some(m) = magnitude {
                    let p = self.param(m).expect("resolved above");
                    if p.domain != MAGNITUDE_DOMAIN {
                        out.push(Violation::new(
                            ViolationKind::DomainMismatch,
                            location.to_string(),
                            format!("{} : {} is not {}", m, p.domain, MAGNITUDE_DOMAIN),
                        ));
                    }
                    if p.role != Role::Assumable {
                        out.push(Violation::new(
                            ViolationKind::NotAssumable,
                            location.to_string(),
                            m.clone(),
                        ));
                    }
                }
            }
        }
    }

    /// Lazily enumerates every total mode assignment, in lexicographic order
    /// of (component declaration order, mode declaration order).
    pub fn mode_assignments(&self) -> ModeAssignments<'_> {
        ModeAssignments {
            model: self,
            next: Some(vec![0; self.components.len()]),
        }
    }
}

/// What kind of invariant a [`Violation`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateDomain,
    EmptyDomain,
    DuplicateValue,
    DuplicateParameter,
    UndeclaredDomain,
    NoComponents,
    DuplicateComponent,
    NoModes,
    DuplicateMode,
    UndeclaredParameter,
    ArityMismatch,
    ValueOutsideDomain,
    DomainMismatch,
    NotAssumable,
}

impl ViolationKind {
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::DuplicateDomain => "duplicate-domain",
            ViolationKind::EmptyDomain => "empty-domain",
            ViolationKind::DuplicateValue => "duplicate-value",
            ViolationKind::DuplicateParameter => "duplicate-parameter",
            ViolationKind::UndeclaredDomain => "undeclared-domain",
            ViolationKind::NoComponents => "no-components",
            ViolationKind::DuplicateComponent => "duplicate-component",
            ViolationKind::NoModes => "no-modes",
            ViolationKind::DuplicateMode => "duplicate-mode",
            ViolationKind::UndeclaredParameter => "undeclared-parameter",
            ViolationKind::ArityMismatch => "arity-mismatch",
            ViolationKind::ValueOutsideDomain => "value-outside-domain",
            ViolationKind::DomainMismatch => "domain-mismatch",
            ViolationKind::NotAssumable => "not-assumable",
        }
    }
}

/// One invariant violation, located well enough to fix it.
/// Violations are data, not failures: validation itself never errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, location: String, detail: String) -> Self {
        Violation {
            kind,
            location,
            detail,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind.label(), self.location)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// A choice of exactly one mode per component: the candidate hypothesis of
/// diagnosis. `modes[i]` is a mode index into `components[i].modes`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModeAssignment {
    pub modes: Vec<usize>,
}

impl ModeAssignment {
    pub fn new(modes: Vec<usize>) -> Self {
        ModeAssignment { modes }
    }

    /// Builds an assignment from `(component, mode)` name pairs. Every
    /// component of the model must be named exactly once.
    pub fn from_names(model: &SystemModel, pairs: &[(&str, &str)]) -> Option<Self> {
        let mut modes = vec![None; model.components.len()];
        for (comp, mode) in pairs {
            let ci = model.component_index(comp)?;
            let mi = model.components[ci].mode_index(mode)?;
            if modes[ci].is_some() {
                return None;
            }
            modes[ci] = Some(mi);
        }
        modes
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .map(ModeAssignment::new)
    }

    /// Number of components assigned a mode other than their first-declared
    /// (conventionally nominal) one.
    pub fn fault_count(&self) -> usize {
        self.modes.iter().filter(|&&m| m != 0).count()
    }

    /// `comp1=mode1 comp2=mode2 ...` in component declaration order.
    pub fn label(&self, model: &SystemModel) -> String {
        self.modes
            .iter()
            .enumerate()
            .map(|(ci, &mi)| {
                format!(
                    "{}={}",
                    model.components[ci].name, model.components[ci].modes[mi].name
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Iterator over all total mode assignments of a model.
pub struct ModeAssignments<'m> {
    model: &'m SystemModel,
    next: Option<Vec<usize>>,
}

impl Iterator for ModeAssignments<'_> {
    type Item = ModeAssignment;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        // Odometer step, last component varying fastest.
        let mut bump = current.clone();
        let mut pos = bump.len();
        loop {
            if pos == 0 {
                break; // wrapped: enumeration is finished
            }
            pos -= 1;
            bump[pos] += 1;
            if bump[pos] < self.model.components[pos].modes.len() {
                self.next = Some(bump);
                break;
            }
            bump[pos] = 0;
        }
        Some(ModeAssignment::new(current))
    }
}

/// An admissible value set observed for one observable parameter.
/// Values are indices into the parameter's domain; a precise observation
/// is a singleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation {
    pub param: usize,
    pub values: BTreeSet<usize>,
}

impl Observation {
    pub fn new(param: usize, values: impl IntoIterator<Item = usize>) -> Self {
        Observation {
            param,
            values: values.into_iter().collect(),
        }
    }

    /// Resolves names against the model. Returns `None` for an unknown
    /// parameter or a value outside its domain.
    pub fn from_names(model: &SystemModel, param: &str, values: &[&str]) -> Option<Self> {
        let idx = model.param_index(param)?;
        let domain = model.param_domain(idx)?;
        let resolved = values
            .iter()
            .map(|v| domain.resolve_value(v))
            .collect::<Option<BTreeSet<_>>>()?;
        Some(Observation {
            param: idx,
            values: resolved,
        })
    }
}

/// A diagnostic problem against a fixed model: a total context assignment,
/// the observations to match, and the subset of them to explain abductively.
///
/// `cxt` is kept in parameter declaration order; `obs_plus` holds parameter
/// indices and must name a subset of the observed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagnosticProblem {
    pub cxt: Vec<(usize, usize)>,
    pub obs: Vec<Observation>,
    pub obs_plus: BTreeSet<usize>,
}

impl DiagnosticProblem {
    pub fn new(cxt: Vec<(usize, usize)>, obs: Vec<Observation>, obs_plus: BTreeSet<usize>) -> Self {
        DiagnosticProblem { cxt, obs, obs_plus }
    }

    pub fn observation_for(&self, param: usize) -> Option<&Observation> {
        self.obs.iter().find(|o| o.param == param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and_gate_model() -> SystemModel {
        let mut m = SystemModel::new();
        m.domains.push(Domain::new("Bit", &["0", "1"]));
        m.parameters.push(Parameter::new("in1", "Bit", Role::Context));
        m.parameters.push(Parameter::new("in2", "Bit", Role::Context));
        m.parameters.push(Parameter::new("out", "Bit", Role::Observable));
        m.components.push(Component {
            name: "a1".to_string(),
            modes: vec![
                Mode {
                    name: "ok".to_string(),
                    constraints: vec![Constraint::Relation {
                        scope: vec!["in1".into(), "in2".into(), "out".into()],
                        tuples: vec![
                            vec!["0".into(), "0".into(), "0".into()],
                            vec!["0".into(), "1".into(), "0".into()],
                            vec!["1".into(), "0".into(), "0".into()],
                            vec!["1".into(), "1".into(), "1".into()],
                        ],
                    }],
                },
                Mode {
                    name: "stuck0".to_string(),
                    constraints: vec![Constraint::EqConst {
                        param: "out".into(),
                        value: "0".into(),
                    }],
                },
            ],
        });
        m
    }

    #[test]
    fn builtin_domains_present() {
        let m = SystemModel::new();
        assert_eq!(
            m.domain(SIGN_DOMAIN).unwrap().values,
            vec!["minus", "zero", "plus"]
        );
        assert_eq!(
            m.domain(MAGNITUDE_DOMAIN).unwrap().values,
            vec!["lt", "eq", "gt"]
        );
    }

    #[test]
    fn sign_aliases_resolve() {
        let m = SystemModel::new();
        let sign = m.domain(SIGN_DOMAIN).unwrap();
        assert_eq!(sign.resolve_value("-"), Some(0));
        assert_eq!(sign.resolve_value("0"), Some(1));
        assert_eq!(sign.resolve_value("+"), Some(2));
        assert_eq!(sign.resolve_value("plus"), Some(2));
        // Aliases are Sign-only: "0" in Bit is the literal value.
        let bit = Domain::new("Bit", &["0", "1"]);
        assert_eq!(bit.resolve_value("0"), Some(0));
        assert_eq!(bit.resolve_value("+"), None);
    }

    #[test]
    fn well_formed_model_has_no_violations() {
        assert!(and_gate_model().validate().is_empty());
    }

    #[test]
    fn undeclared_parameter_is_located() {
        let mut m = and_gate_model();
        m.components[0].modes[0]
            .constraints
            .push(Constraint::EqConst {
                param: "in3".into(),
                value: "0".into(),
            });
        let violations = m.validate();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::UndeclaredParameter);
        assert_eq!(violations[0].location, "component a1, mode ok");
        assert_eq!(violations[0].detail, "in3");
    }

    #[test]
    fn sign_constraint_rejects_non_sign_operand() {
        let mut m = and_gate_model();
        m.parameters.push(Parameter::new("s1", SIGN_DOMAIN, Role::Internal));
        m.parameters.push(Parameter::new("s2", SIGN_DOMAIN, Role::Internal));
        m.always.push(Constraint::SignSub {
            a: "out".into(), // Bit, not Sign
            b: "s1".into(),
            c: "s2".into(),
            magnitude: None,
        });
        let violations = m.validate();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].kind, ViolationKind::DomainMismatch);
        assert_eq!(violations[0].location, "always #1");
    }

    #[test]
    fn magnitude_must_be_assumable_over_magnitude_domain() {
        let mut m = and_gate_model();
        for p in ["a", "b", "c"] {
            m.parameters.push(Parameter::new(p, SIGN_DOMAIN, Role::Internal));
        }
        m.parameters.push(Parameter::new("m1", SIGN_DOMAIN, Role::Internal));
        m.always.push(Constraint::SignSum {
            a: "a".into(),
            b: "b".into(),
            c: "c".into(),
            magnitude: Some("m1".into()),
        });
        let kinds: Vec<_> = m.validate().into_iter().map(|v| v.kind).collect();
        assert!(kinds.contains(&ViolationKind::DomainMismatch));
        assert!(kinds.contains(&ViolationKind::NotAssumable));
    }

    #[test]
    fn tuple_arity_and_membership_checked() {
        let mut m = and_gate_model();
        m.always.push(Constraint::Relation {
            scope: vec!["in1".into(), "in2".into()],
            tuples: vec![
                vec!["0".into()],                 // wrong arity
                vec!["0".into(), "2".into()],     // 2 not in Bit
            ],
        });
        let kinds: Vec<_> = m.validate().into_iter().map(|v| v.kind).collect();
        assert_eq!(
            kinds,
            vec![ViolationKind::ArityMismatch, ViolationKind::ValueOutsideDomain]
        );
    }

    #[test]
    fn validate_is_idempotent() {
        let mut m = and_gate_model();
        m.components.push(m.components[0].clone()); // duplicate component
        assert_eq!(m.validate(), m.validate());
    }

    #[test]
    fn mode_assignments_single_component() {
        let m = and_gate_model();
        let all: Vec<_> = m.mode_assignments().collect();
        assert_eq!(
            all,
            vec![ModeAssignment::new(vec![0]), ModeAssignment::new(vec![1])]
        );
    }

    #[test]
    fn mode_assignments_two_components_lexicographic() {
        let mut m = and_gate_model();
        let mut second = m.components[0].clone();
        second.name = "a2".to_string();
        m.components.push(second);
        let all: Vec<_> = m.mode_assignments().map(|a| a.modes).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn mode_assignment_count_is_product_of_mode_counts() {
        // 2 × 3 × 2 components: 12 total, computed by hand.
        let mut m = SystemModel::new();
        for (name, n_modes) in [("c1", 2), ("c2", 3), ("c3", 2)] {
            m.components.push(Component {
                name: name.to_string(),
                modes: (0..n_modes)
                    .map(|i| Mode {
                        name: format!("m{i}"),
                        constraints: Vec::new(),
                    })
                    .collect(),
            });
        }
        let all: Vec<_> = m.mode_assignments().collect();
        assert_eq!(all.len(), 12);
        // Total, no repetition.
        let distinct: BTreeSet<_> = all.iter().map(|a| a.modes.clone()).collect();
        assert_eq!(distinct.len(), 12);
        assert!(all.iter().all(|a| a.modes.len() == 3));
    }

    #[test]
    fn fault_count_counts_non_first_modes() {
        let a = ModeAssignment::new(vec![0, 2, 1, 0]);
        assert_eq!(a.fault_count(), 2);
    }
}
