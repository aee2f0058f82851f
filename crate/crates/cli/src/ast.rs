//! Abstract syntax for the expression language.

use sigma_core::Polarity;

/// Operation forms of the surface syntax, with their arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Fuse,
    Intersect,
    AntiIntersect,
    Difference,
    StarDifference,
    Star,
    Antiset,
    Power,
    Generated,
    IntegerSpace,
    Pair,
    Unpair,
    Product,
    Compose,
    Inverse,
    Antifunction,
    Antinverse,
    Classify,
    Diagram,
}

impl Op {
    pub fn from_name(name: &str) -> Option<Op> {
        Some(match name {
            "fuse" => Op::Fuse,
            "int" => Op::Intersect,
            "aint" => Op::AntiIntersect,
            "diff" => Op::Difference,
            "sdiff" => Op::StarDifference,
            "star" => Op::Star,
            "antiset" => Op::Antiset,
            "pow" => Op::Power,
            "gen" => Op::Generated,
            "ispace" => Op::IntegerSpace,
            "pair" => Op::Pair,
            "unpair" => Op::Unpair,
            "prod" => Op::Product,
            "compose" => Op::Compose,
            "inverse" => Op::Inverse,
            "antifn" => Op::Antifunction,
            "antinv" => Op::Antinverse,
            "classify" => Op::Classify,
            "diagram" => Op::Diagram,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Op::Fuse => "fuse",
            Op::Intersect => "int",
            Op::AntiIntersect => "aint",
            Op::Difference => "diff",
            Op::StarDifference => "sdiff",
            Op::Star => "star",
            Op::Antiset => "antiset",
            Op::Power => "pow",
            Op::Generated => "gen",
            Op::IntegerSpace => "ispace",
            Op::Pair => "pair",
            Op::Unpair => "unpair",
            Op::Product => "prod",
            Op::Compose => "compose",
            Op::Inverse => "inverse",
            Op::Antifunction => "antifn",
            Op::Antinverse => "antinv",
            Op::Classify => "classify",
            Op::Diagram => "diagram",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Op::Fuse
            | Op::Intersect
            | Op::AntiIntersect
            | Op::Difference
            | Op::StarDifference
            | Op::Generated
            | Op::Pair
            | Op::Product
            | Op::Compose => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A bare identifier: a binding reference when bound, else a plain atom.
    Ident(String),
    /// An explicitly suffixed atom (`1*`, `1_T`).
    Atom { name: String, polarity: Polarity },
    SetLit(Vec<Expr>),
    Call(Op, Vec<Expr>),
    FnLit {
        domain: Box<Expr>,
        codomain: Box<Expr>,
        mappings: Vec<(Expr, Expr)>,
    },
}
