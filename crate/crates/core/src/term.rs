//! Ternary terms over generator symbols, used as witness certificates for
//! closure elements and for transporting identities along homomorphisms.

use crate::clone::compose3;
use crate::op::{FiniteOperation, OpError};

/// A ternary term: a variable x1, x2, x3 or a generator symbol applied to
/// three subterms. The symbol index refers to a generator list supplied at
/// evaluation time; single-generator parts print it as plain `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(u8),
    App(u8, Box<[Term; 3]>),
}

impl Term {
    pub fn var(i: u8) -> Term {
        assert!((1..=3).contains(&i), "variables are x1, x2, x3");
        Term::Var(i)
    }

    pub fn app(generator: u8, args: [Term; 3]) -> Term {
        Term::App(generator, Box::new(args))
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap(),
        }
    }

    /// Interprets every symbol by the corresponding generator and evaluates
    /// to a concrete ternary operation on the generators' domain.
    pub fn evaluate(&self, generators: &[FiniteOperation]) -> Result<FiniteOperation, OpError> {
        let domain = generators
            .first()
            .map(FiniteOperation::domain_size)
            .expect("at least one generator");
        match self {
            Term::Var(i) => Ok(FiniteOperation::projection(domain, 3, *i as usize)),
            Term::App(g, args) => {
                let f = &generators[*g as usize];
                let g1 = args[0].evaluate(generators)?;
                let g2 = args[1].evaluate(generators)?;
                let g3 = args[2].evaluate(generators)?;
                compose3(f, &g1, &g2, &g3)
            }
        }
    }

    /// Prefix notation: variables as x1..x3, the symbol as F (or F1, F2, …
    /// when the part has several generators).
    pub fn to_prefix(&self, generator_count: usize) -> String {
        let mut out = String::new();
        self.write_prefix(generator_count, &mut out);
        out
    }

    fn write_prefix(&self, generator_count: usize, out: &mut String) {
        match self {
            Term::Var(i) => {
                out.push('x');
                out.push_str(&i.to_string());
            }
            Term::App(g, args) => {
                out.push('F');
                if generator_count > 1 {
                    out.push_str(&(g + 1).to_string());
                }
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    a.write_prefix(generator_count, out);
                }
                out.push(')');
            }
        }
    }
}
