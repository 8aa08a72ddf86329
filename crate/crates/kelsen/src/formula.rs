//! Formula ASTs shared by the evaluators and the proof checker.
//!
//! Two languages live here: [`HybridFormula`] for (classical and
//! intuitionistic) hybrid logic, and [`DeonticFormula`] for the small
//! obligation/permission fragment used by the proof checker. Both come with a
//! canonical, fully parenthesized printer; the inverse parsers are in
//! [`crate::parse`].

use std::fmt;

use serde::{Deserialize, Serialize};

/// An atomic proposition symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Prop(pub String);

impl Prop {
    pub fn new(name: impl Into<String>) -> Self {
        Prop(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A nominal: a propositional symbol true at exactly one world.
///
/// Nominals share the identifier syntax with propositions but live in a
/// disjoint namespace; a model declares which identifiers are which.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Nominal(pub String);

impl Nominal {
    pub fn new(name: impl Into<String>) -> Self {
        Nominal(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Nominal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A hybrid-logic formula.
///
/// `Not` is primitive in the classical reading. Intuitionistically it is
/// definitionally `Implies(phi, Bottom)` and every evaluator in this crate
/// treats the two forms identically; [`HybridFormula::normalize_negation`]
/// rewrites one into the other when a canonical representative is needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HybridFormula {
    Prop(Prop),
    Nom(Nominal),
    Top,
    Bottom,
    Not(Box<HybridFormula>),
    And(Box<HybridFormula>, Box<HybridFormula>),
    Or(Box<HybridFormula>, Box<HybridFormula>),
    Implies(Box<HybridFormula>, Box<HybridFormula>),
    Box_(Box<HybridFormula>),
    Diamond(Box<HybridFormula>),
    /// The satisfaction operator `@a phi`: evaluate `phi` at the world named
    /// by `a`.
    At(Nominal, Box<HybridFormula>),
}

impl HybridFormula {
    pub fn prop(name: impl Into<String>) -> Self {
        HybridFormula::Prop(Prop::new(name))
    }

    pub fn nom(name: impl Into<String>) -> Self {
        HybridFormula::Nom(Nominal::new(name))
    }

    pub fn not(phi: HybridFormula) -> Self {
        HybridFormula::Not(Box::new(phi))
    }

    pub fn and(phi: HybridFormula, psi: HybridFormula) -> Self {
        HybridFormula::And(Box::new(phi), Box::new(psi))
    }

    pub fn or(phi: HybridFormula, psi: HybridFormula) -> Self {
        HybridFormula::Or(Box::new(phi), Box::new(psi))
    }

    pub fn implies(phi: HybridFormula, psi: HybridFormula) -> Self {
        HybridFormula::Implies(Box::new(phi), Box::new(psi))
    }

    pub fn box_(phi: HybridFormula) -> Self {
        HybridFormula::Box_(Box::new(phi))
    }

    pub fn diamond(phi: HybridFormula) -> Self {
        HybridFormula::Diamond(Box::new(phi))
    }

    pub fn at(nom: impl Into<String>, phi: HybridFormula) -> Self {
        HybridFormula::At(Nominal::new(nom), Box::new(phi))
    }

    /// All nominals occurring in the formula, as atoms or `@`-binders.
    pub fn free_nominals(&self) -> std::collections::BTreeSet<Nominal> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_nominals(&mut out);
        out
    }

    fn collect_nominals(&self, out: &mut std::collections::BTreeSet<Nominal>) {
        match self {
            HybridFormula::Prop(_) | HybridFormula::Top | HybridFormula::Bottom => {}
            HybridFormula::Nom(n) => {
                out.insert(n.clone());
            }
            HybridFormula::Not(p) | HybridFormula::Box_(p) | HybridFormula::Diamond(p) => {
                p.collect_nominals(out)
            }
            HybridFormula::And(p, q)
            | HybridFormula::Or(p, q)
            | HybridFormula::Implies(p, q) => {
                p.collect_nominals(out);
                q.collect_nominals(out);
            }
            HybridFormula::At(n, p) => {
                out.insert(n.clone());
                p.collect_nominals(out);
            }
        }
    }

    /// All propositions occurring in the formula.
    pub fn props(&self) -> std::collections::BTreeSet<Prop> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut std::collections::BTreeSet<Prop>) {
        match self {
            HybridFormula::Prop(p) => {
                out.insert(p.clone());
            }
            HybridFormula::Nom(_) | HybridFormula::Top | HybridFormula::Bottom => {}
            HybridFormula::Not(p) | HybridFormula::Box_(p) | HybridFormula::Diamond(p) => {
                p.collect_props(out)
            }
            HybridFormula::And(p, q)
            | HybridFormula::Or(p, q)
            | HybridFormula::Implies(p, q) => {
                p.collect_props(out);
                q.collect_props(out);
            }
            HybridFormula::At(_, p) => p.collect_props(out),
        }
    }

    /// Rewrite every `Not(phi)` into `Implies(phi, Bottom)`.
    ///
    /// This is the normal form used when a formula is read intuitionistically;
    /// evaluation does not depend on it (the evaluators already treat both
    /// forms alike) but structural comparisons do.
    pub fn normalize_negation(&self) -> HybridFormula {
        match self {
            HybridFormula::Prop(_)
            | HybridFormula::Nom(_)
            | HybridFormula::Top
            | HybridFormula::Bottom => self.clone(),
            HybridFormula::Not(p) => {
                HybridFormula::implies(p.normalize_negation(), HybridFormula::Bottom)
            }
            HybridFormula::And(p, q) => {
                HybridFormula::and(p.normalize_negation(), q.normalize_negation())
            }
            HybridFormula::Or(p, q) => {
                HybridFormula::or(p.normalize_negation(), q.normalize_negation())
            }
            HybridFormula::Implies(p, q) => {
                HybridFormula::implies(p.normalize_negation(), q.normalize_negation())
            }
            HybridFormula::Box_(p) => HybridFormula::box_(p.normalize_negation()),
            HybridFormula::Diamond(p) => HybridFormula::diamond(p.normalize_negation()),
            HybridFormula::At(n, p) => HybridFormula::At(n.clone(), Box::new(p.normalize_negation())),
        }
    }

    /// Canonical, fully parenthesized text. `parse_hybrid(render(f)) == f`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s);
        s
    }

    fn render_into(&self, s: &mut String) {
        match self {
            HybridFormula::Prop(p) => s.push_str(&p.0),
            HybridFormula::Nom(n) => s.push_str(&n.0),
            HybridFormula::Top => s.push('T'),
            HybridFormula::Bottom => s.push('F'),
            HybridFormula::Not(p) => {
                s.push('~');
                p.render_unary_arg(s);
            }
            HybridFormula::And(p, q) => {
                s.push('(');
                p.render_into(s);
                s.push_str(" & ");
                q.render_into(s);
                s.push(')');
            }
            HybridFormula::Or(p, q) => {
                s.push('(');
                p.render_into(s);
                s.push_str(" | ");
                q.render_into(s);
                s.push(')');
            }
            HybridFormula::Implies(p, q) => {
                s.push('(');
                p.render_into(s);
                s.push_str(" -> ");
                q.render_into(s);
                s.push(')');
            }
            HybridFormula::Box_(p) => {
                s.push_str("[]");
                p.render_unary_arg(s);
            }
            HybridFormula::Diamond(p) => {
                s.push_str("<>");
                p.render_unary_arg(s);
            }
            HybridFormula::At(n, p) => {
                s.push('@');
                s.push_str(&n.0);
                s.push_str(" (");
                p.render_into(s);
                s.push(')');
            }
        }
    }

    // Arguments of ~, [], <> need no extra parentheses: atoms print bare,
    // binary operators come pre-parenthesized, and chained unaries nest.
    fn render_unary_arg(&self, s: &mut String) {
        self.render_into(s);
    }
}

impl fmt::Display for HybridFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A formula of the deontic proof fragment.
///
/// `Perm(phi)` is definitionally `Neg(Ob(Neg(phi)))`; the deontic parser
/// normalizes it away on input, and [`DeonticFormula::normalize_perm`] does
/// the same for programmatically built trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeonticFormula {
    Atom(String),
    Neg(Box<DeonticFormula>),
    Conj(Box<DeonticFormula>, Box<DeonticFormula>),
    Impl(Box<DeonticFormula>, Box<DeonticFormula>),
    Ob(Box<DeonticFormula>),
    Perm(Box<DeonticFormula>),
}

impl DeonticFormula {
    pub fn atom(name: impl Into<String>) -> Self {
        DeonticFormula::Atom(name.into())
    }

    pub fn neg(phi: DeonticFormula) -> Self {
        DeonticFormula::Neg(Box::new(phi))
    }

    pub fn conj(phi: DeonticFormula, psi: DeonticFormula) -> Self {
        DeonticFormula::Conj(Box::new(phi), Box::new(psi))
    }

    pub fn impl_(phi: DeonticFormula, psi: DeonticFormula) -> Self {
        DeonticFormula::Impl(Box::new(phi), Box::new(psi))
    }

    pub fn ob(phi: DeonticFormula) -> Self {
        DeonticFormula::Ob(Box::new(phi))
    }

    pub fn perm(phi: DeonticFormula) -> Self {
        DeonticFormula::Perm(Box::new(phi))
    }

    /// Rewrite every `Perm(phi)` into `Neg(Ob(Neg(phi)))`.
    pub fn normalize_perm(&self) -> DeonticFormula {
        match self {
            DeonticFormula::Atom(_) => self.clone(),
            DeonticFormula::Neg(p) => DeonticFormula::neg(p.normalize_perm()),
            DeonticFormula::Conj(p, q) => {
                DeonticFormula::conj(p.normalize_perm(), q.normalize_perm())
            }
            DeonticFormula::Impl(p, q) => {
                DeonticFormula::impl_(p.normalize_perm(), q.normalize_perm())
            }
            DeonticFormula::Ob(p) => DeonticFormula::ob(p.normalize_perm()),
            DeonticFormula::Perm(p) => DeonticFormula::neg(DeonticFormula::ob(
                DeonticFormula::neg(p.normalize_perm()),
            )),
        }
    }

    /// Canonical, fully parenthesized text. `parse_deontic(render(f))` equals
    /// `f.normalize_perm()`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s);
        s
    }

    fn render_into(&self, s: &mut String) {
        match self {
            DeonticFormula::Atom(a) => s.push_str(a),
            DeonticFormula::Neg(p) => {
                s.push('~');
                p.render_into(s);
            }
            DeonticFormula::Conj(p, q) => {
                s.push('(');
                p.render_into(s);
                s.push_str(" & ");
                q.render_into(s);
                s.push(')');
            }
            DeonticFormula::Impl(p, q) => {
                s.push('(');
                p.render_into(s);
                s.push_str(" -> ");
                q.render_into(s);
                s.push(')');
            }
            DeonticFormula::Ob(p) => {
                s.push_str("O(");
                p.render_into(s);
                s.push(')');
            }
            DeonticFormula::Perm(p) => {
                s.push_str("P(");
                p.render_into(s);
                s.push(')');
            }
        }
    }
}

impl fmt::Display for DeonticFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_deontic_obligation_of_implication() {
        let f = DeonticFormula::ob(DeonticFormula::impl_(
            DeonticFormula::atom("p"),
            DeonticFormula::atom("q"),
        ));
        assert_eq!(f.render(), "O((p -> q))");
    }

    #[test]
    fn render_at_top() {
        let f = HybridFormula::at("n1", HybridFormula::Top);
        assert_eq!(f.render(), "@n1 (T)");
    }

    #[test]
    fn render_implies_bottom() {
        let f = HybridFormula::implies(HybridFormula::prop("p"), HybridFormula::Bottom);
        assert_eq!(f.render(), "(p -> F)");
    }

    #[test]
    fn free_nominals_of_top_is_empty() {
        assert!(HybridFormula::Top.free_nominals().is_empty());
    }

    #[test]
    fn free_nominals_collects_at_binder() {
        let f = HybridFormula::at("n3", HybridFormula::not(HybridFormula::prop("p")));
        let noms = f.free_nominals();
        assert_eq!(noms.len(), 1);
        assert!(noms.contains(&Nominal::new("n3")));
    }

    #[test]
    fn free_nominals_collects_atoms_and_binders() {
        let f = HybridFormula::and(
            HybridFormula::nom("a"),
            HybridFormula::at("b", HybridFormula::nom("a")),
        );
        let noms = f.free_nominals();
        assert_eq!(noms.len(), 2);
        assert!(noms.contains(&Nominal::new("a")));
        assert!(noms.contains(&Nominal::new("b")));
    }

    #[test]
    fn normalize_negation_rewrites_not() {
        let f = HybridFormula::not(HybridFormula::prop("p"));
        assert_eq!(
            f.normalize_negation(),
            HybridFormula::implies(HybridFormula::prop("p"), HybridFormula::Bottom)
        );
    }

    #[test]
    fn normalize_perm_is_neg_ob_neg() {
        let f = DeonticFormula::perm(DeonticFormula::atom("p"));
        assert_eq!(
            f.normalize_perm(),
            DeonticFormula::neg(DeonticFormula::ob(DeonticFormula::neg(
                DeonticFormula::atom("p")
            )))
        );
    }
}
