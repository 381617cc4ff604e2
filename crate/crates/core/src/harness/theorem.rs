use std::fmt;

use crate::eds::eds_via_square;
use crate::graph::Graph;
use crate::patterns::{find_induced, is_f_free, p6_banner, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// The square is P6-free.
    T1,
    /// The square is banner-free.
    T2,
}

impl Theorem {
    pub const ALL: [Theorem; 2] = [Theorem::T1, Theorem::T2];

    /// Name of the pattern the square must avoid.
    pub fn pattern_name(self) -> &'static str {
        match self {
            Theorem::T1 => "P6",
            Theorem::T2 => "banner",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inapplicable {
    /// The graph contains an induced P6 or banner.
    NotInClass,
    /// The graph is in the class but has no efficient dominating set.
    NoEds,
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inapplicable::NotInClass => "not-in-class",
            Inapplicable::NoEds => "no-eds",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    NotApplicable(Inapplicable),
    /// Induced copy of the forbidden pattern in the square.
    Violation(Embedding),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Holds => f.write_str("holds"),
            Status::NotApplicable(reason) => write!(f, "not-applicable({reason})"),
            Status::Violation(e) => write!(f, "violation{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub status: Status,
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.theorem, self.status)
    }
}

/// Everything the harness learns about one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub in_class: bool,
    /// `None` outside the class, where it is not computed.
    pub has_eds: Option<bool>,
    /// Induced P6 and banner in the square, for class members.
    pub square_witness: [Option<Embedding>; 2],
    pub verdicts: [TheoremVerdict; 2],
}

/// Class test, EDS decision, and both square searches for one graph.
pub fn evaluate(g: &Graph) -> Evaluation {
    let family = p6_banner();
    if !is_f_free(g, &family) {
        let verdict = |theorem| TheoremVerdict { theorem, status: Status::NotApplicable(Inapplicable::NotInClass) };
        return Evaluation {
            in_class: false,
            has_eds: None,
            square_witness: [None, None],
            verdicts: [verdict(Theorem::T1), verdict(Theorem::T2)],
        };
    }
    let has_eds = eds_via_square(g).outcome.exists();
    let square = g.square();
    let square_witness = [find_induced(&square, &family[0]), find_induced(&square, &family[1])];
    let verdicts = Theorem::ALL.map(|theorem| {
        let status = match &square_witness[theorem.index()] {
            _ if !has_eds => Status::NotApplicable(Inapplicable::NoEds),
            None => Status::Holds,
            Some(e) => {
                debug_assert!(e.is_induced(&square, family[theorem.index()].graph()));
                Status::Violation(e.clone())
            }
        };
        TheoremVerdict { theorem, status }
    });
    Evaluation { in_class: true, has_eds: Some(has_eds), square_witness, verdicts }
}

/// Checks one theorem on one graph.
pub fn verify_theorem(g: &Graph, which: Theorem) -> TheoremVerdict {
    let [t1, t2] = evaluate(g).verdicts;
    match which {
        Theorem::T1 => t1,
        Theorem::T2 => t2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern_by_name;

    #[test]
    fn golden_verdicts() {
        let p5 = Graph::path(5);
        assert_eq!(verify_theorem(&p5, Theorem::T1).status, Status::Holds);
        assert_eq!(verify_theorem(&p5, Theorem::T2).status, Status::Holds);

        let banner = pattern_by_name("banner").unwrap().graph().clone();
        for t in Theorem::ALL {
            assert_eq!(verify_theorem(&banner, t).status, Status::NotApplicable(Inapplicable::NotInClass));
            assert_eq!(verify_theorem(&Graph::cycle(4), t).status, Status::NotApplicable(Inapplicable::NoEds));
        }
    }

    #[test]
    fn evaluation_records_square_patterns_without_eds() {
        // C5 is in the class, has no perfect code, and its square is K5
        let e = evaluate(&Graph::cycle(5));
        assert!(e.in_class);
        assert_eq!(e.has_eds, Some(false));
        assert_eq!(e.square_witness, [None, None]);
    }

    #[test]
    fn display() {
        let v = verify_theorem(&Graph::cycle(4), Theorem::T2);
        assert_eq!(v.to_string(), "T2=not-applicable(no-eds)");
        let v = TheoremVerdict { theorem: Theorem::T1, status: Status::Violation(Embedding { map: vec![3, 1] }) };
        assert_eq!(v.to_string(), "T1=violation[3,1]");
    }
}
