//! Subtraction-free expressions with square roots, recorded by running the generic move
//! formulas over a symbolic semifield, and their tropicalizations.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use moves::{evaluate_closed_form, MoveKind, Semifield, SfError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::ZoneError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SfNode {
    Var(usize),
    Const(u32),
    Add(usize, usize),
    Mul(usize, usize),
    Div(usize, usize),
    Sqrt(usize),
}

/// A DAG of semifield operations; nodes are stored in topological order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SfExpression {
    pub arity: usize,
    pub nodes: Vec<SfNode>,
    pub outputs: Vec<usize>,
}

#[derive(Debug)]
enum Sym {
    Var(usize),
    Const(u32),
    Add(Symbol, Symbol),
    Mul(Symbol, Symbol),
    Div(Symbol, Symbol),
    Sqrt(Symbol),
}

/// Symbolic semifield element used to record formulas.
#[derive(Debug, Clone)]
pub struct Symbol(Rc<Sym>);

impl PartialEq for Symbol {
    fn eq(&self, o: &Self) -> bool {
        Rc::ptr_eq(&self.0, &o.0)
    }
}

impl Symbol {
    pub fn var(k: usize) -> Self {
        Symbol(Rc::new(Sym::Var(k)))
    }
}

impl Semifield for Symbol {
    fn sf_one() -> Self {
        Symbol(Rc::new(Sym::Const(1)))
    }

    fn sf_add(&self, o: &Self) -> Self {
        Symbol(Rc::new(Sym::Add(self.clone(), o.clone())))
    }

    fn sf_mul(&self, o: &Self) -> Self {
        Symbol(Rc::new(Sym::Mul(self.clone(), o.clone())))
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(Symbol(Rc::new(Sym::Div(self.clone(), o.clone()))))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Ok(Symbol(Rc::new(Sym::Sqrt(self.clone()))))
    }

    fn sf_const(n: u32) -> Self {
        Symbol(Rc::new(Sym::Const(n)))
    }
}

struct Builder {
    nodes: Vec<SfNode>,
    seen: HashMap<*const Sym, usize>,
    interned: HashMap<SfNode, usize>,
}

impl Builder {
    fn push(&mut self, n: SfNode) -> usize {
        if let Some(&k) = self.interned.get(&n) {
            return k;
        }
        self.nodes.push(n);
        let k = self.nodes.len() - 1;
        self.interned.insert(n, k);
        k
    }

    fn visit(&mut self, s: &Symbol) -> usize {
        let key = Rc::as_ptr(&s.0);
        if let Some(&k) = self.seen.get(&key) {
            return k;
        }
        let node = match &*s.0 {
            Sym::Var(k) => SfNode::Var(*k),
            Sym::Const(n) => SfNode::Const(*n),
            Sym::Add(a, b) => SfNode::Add(self.visit(a), self.visit(b)),
            Sym::Mul(a, b) => SfNode::Mul(self.visit(a), self.visit(b)),
            Sym::Div(a, b) => SfNode::Div(self.visit(a), self.visit(b)),
            Sym::Sqrt(a) => SfNode::Sqrt(self.visit(a)),
        };
        let k = self.push(node);
        self.seen.insert(key, k);
        k
    }
}

impl SfExpression {
    pub fn from_symbols(arity: usize, outputs: &[Symbol]) -> Self {
        let mut b = Builder {
            nodes: Vec::new(),
            seen: HashMap::new(),
            interned: HashMap::new(),
        };
        let outputs = outputs.iter().map(|s| b.visit(s)).collect();
        SfExpression {
            arity,
            nodes: b.nodes,
            outputs,
        }
    }

    /// The closed-form coordinate map of a move, in the tuple order of its identity.
    pub fn for_move(kind: MoveKind) -> Result<Self, ZoneError> {
        let n = kind.arity();
        let vars: Vec<Symbol> = (0..n).map(Symbol::var).collect();
        let out = evaluate_closed_form(kind, &vars).map_err(|e| ZoneError::UnsupportedMove(format!("{kind}: {e}")))?;
        Ok(Self::from_symbols(n, &out))
    }

    pub fn evaluate<S: Semifield>(&self, vars: &[S]) -> Result<Vec<S>, ZoneError> {
        if vars.len() != self.arity {
            return Err(ZoneError::Arity {
                expected: self.arity,
                got: vars.len(),
            });
        }
        let mut val: Vec<S> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let v = match *n {
                SfNode::Var(k) => vars[k].clone(),
                SfNode::Const(c) => S::sf_const(c),
                SfNode::Add(a, b) => val[a].sf_add(&val[b]),
                SfNode::Mul(a, b) => val[a].sf_mul(&val[b]),
                SfNode::Div(a, b) => val[a].sf_div(&val[b])?,
                SfNode::Sqrt(a) => val[a].sf_sqrt()?,
            };
            val.push(v);
        }
        Ok(self.outputs.iter().map(|&k| val[k].clone()).collect())
    }

    pub fn uses_sqrt(&self) -> bool {
        self.nodes.iter().any(|n| matches!(n, SfNode::Sqrt(_)))
    }

    fn render(&self, k: usize, names: &[String], out: &mut String) {
        match self.nodes[k] {
            SfNode::Var(v) => out.push_str(&names[v]),
            SfNode::Const(c) => out.push_str(&c.to_string()),
            SfNode::Add(a, b) => {
                out.push('(');
                self.render(a, names, out);
                out.push_str(" + ");
                self.render(b, names, out);
                out.push(')');
            }
            SfNode::Mul(a, b) => {
                self.render(a, names, out);
                out.push('·');
                self.render(b, names, out);
            }
            SfNode::Div(a, b) => {
                out.push('(');
                self.render(a, names, out);
                out.push_str(")/(");
                self.render(b, names, out);
                out.push(')');
            }
            SfNode::Sqrt(a) => {
                out.push_str("√(");
                self.render(a, names, out);
                out.push(')');
            }
        }
    }

    pub fn output_strings(&self) -> Vec<String> {
        let names = var_names(self.arity);
        self.outputs
            .iter()
            .map(|&k| {
                let mut s = String::new();
                self.render(k, &names, &mut s);
                s
            })
            .collect()
    }
}

pub(crate) fn var_names(n: usize) -> Vec<String> {
    (0..n).map(|k| format!("x{k}")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TropNode {
    Var(usize),
    Zero,
    Min(usize, usize),
    Plus(usize, usize),
    Minus(usize, usize),
    Half(usize),
}

/// A piecewise-linear expression in min, +, − and halving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropExpression {
    pub arity: usize,
    pub nodes: Vec<TropNode>,
    pub outputs: Vec<usize>,
}

/// Replaces ⊕, ⊗, ÷, √ by min, +, −, halving; positive constants become 0.
pub fn tropicalize(e: &SfExpression) -> TropExpression {
    let nodes = e
        .nodes
        .iter()
        .map(|n| match *n {
            SfNode::Var(k) => TropNode::Var(k),
            SfNode::Const(_) => TropNode::Zero,
            SfNode::Add(a, b) => TropNode::Min(a, b),
            SfNode::Mul(a, b) => TropNode::Plus(a, b),
            SfNode::Div(a, b) => TropNode::Minus(a, b),
            SfNode::Sqrt(a) => TropNode::Half(a),
        })
        .collect();
    TropExpression {
        arity: e.arity,
        nodes,
        outputs: e.outputs.clone(),
    }
}

impl TropExpression {
    pub fn evaluate(&self, v: &[BigRational]) -> Result<Vec<BigRational>, ZoneError> {
        if v.len() != self.arity {
            return Err(ZoneError::Arity {
                expected: self.arity,
                got: v.len(),
            });
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mut val: Vec<BigRational> = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let x = match *n {
                TropNode::Var(k) => v[k].clone(),
                TropNode::Zero => BigRational::zero(),
                TropNode::Min(a, b) => val[a].clone().min(val[b].clone()),
                TropNode::Plus(a, b) => &val[a] + &val[b],
                TropNode::Minus(a, b) => &val[a] - &val[b],
                TropNode::Half(a) => &val[a] / &two,
            };
            val.push(x);
        }
        Ok(self.outputs.iter().map(|&k| val[k].clone()).collect())
    }

    fn render(&self, k: usize, names: &[String], out: &mut String) {
        match self.nodes[k] {
            TropNode::Var(v) => out.push_str(&names[v]),
            TropNode::Zero => out.push('0'),
            TropNode::Min(a, b) => {
                // flatten nested minima
                let mut args = Vec::new();
                self.min_args(a, &mut args);
                self.min_args(b, &mut args);
                out.push_str("min(");
                for (j, &x) in args.iter().enumerate() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    self.render(x, names, out);
                }
                out.push(')');
            }
            TropNode::Plus(a, b) => {
                if self.nodes[a] == TropNode::Zero {
                    return self.render(b, names, out);
                }
                if self.nodes[b] == TropNode::Zero {
                    return self.render(a, names, out);
                }
                out.push('(');
                self.render(a, names, out);
                out.push_str(" + ");
                self.render(b, names, out);
                out.push(')');
            }
            TropNode::Minus(a, b) => {
                if self.nodes[b] == TropNode::Zero {
                    return self.render(a, names, out);
                }
                out.push('(');
                self.render(a, names, out);
                out.push_str(" − ");
                self.render(b, names, out);
                out.push(')');
            }
            TropNode::Half(a) => {
                self.render(a, names, out);
                out.push_str("/2");
            }
        }
    }

    fn min_args(&self, k: usize, args: &mut Vec<usize>) {
        if let TropNode::Min(a, b) = self.nodes[k] {
            self.min_args(a, args);
            self.min_args(b, args);
        } else {
            args.push(k);
        }
    }

    pub fn output_strings(&self) -> Vec<String> {
        let names = var_names(self.arity);
        self.outputs
            .iter()
            .map(|&k| {
                let mut s = String::new();
                self.render(k, &names, &mut s);
                s
            })
            .collect()
    }
}

impl fmt::Display for TropExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.output_strings().join(", "))
    }
}

impl fmt::Display for SfExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.output_strings().join(", "))
    }
}
