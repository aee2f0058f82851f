//! σ-relations, σ-functions and σ-antifunctions: identity and antidentity,
//! composition, inverse and antinverse, and the 16-function diagram spanned
//! by one bijection whose carriers both have antisets.

use crate::error::Error;
use crate::pairs::pair;
use crate::set::{Element, SigmaSet};
use std::fmt;

/// A binary σ-relation on A × B: a graph of component pairs whose encodings
/// form a σ-subset of the Cartesian product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    domain: SigmaSet,
    codomain: SigmaSet,
    graph: Vec<(Element, Element)>,
}

impl Relation {
    /// Builds a relation, rejecting pairs outside the carriers.
    pub fn new(
        domain: SigmaSet,
        codomain: SigmaSet,
        pairs: Vec<(Element, Element)>,
    ) -> Result<Self, Error> {
        let mut graph = pairs;
        for (x, y) in &graph {
            if !domain.contains(x) || !codomain.contains(y) {
                return Err(Error::PairOutOfCarrier {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        }
        graph.sort();
        graph.dedup();
        Ok(Relation {
            domain,
            codomain,
            graph,
        })
    }

    pub fn domain_carrier(&self) -> &SigmaSet {
        &self.domain
    }

    pub fn codomain_carrier(&self) -> &SigmaSet {
        &self.codomain
    }

    pub fn graph(&self) -> &[(Element, Element)] {
        &self.graph
    }

    /// dom(R) = {x ∈ A : R(x) = y for some y}.
    pub fn dom(&self) -> SigmaSet {
        SigmaSet::new(self.graph.iter().map(|(x, _)| x.clone()).collect())
            .expect("domain members come from a carrier")
    }

    /// ran(R) = {y ∈ B : R(x) = y for some x}.
    pub fn ran(&self) -> SigmaSet {
        SigmaSet::new(self.graph.iter().map(|(_, y)| y.clone()).collect())
            .expect("range members come from a carrier")
    }

    /// The graph as a σ-set of ordered-pair encodings, a σ-subset of A × B.
    pub fn graph_encoding(&self) -> SigmaSet {
        SigmaSet::new(
            self.graph
                .iter()
                .map(|(x, y)| Element::Set(pair(x, y).encoding().clone()))
                .collect(),
        )
        .expect("pair encodings form a sigma-set")
    }
}

/// How a σ-function sits over its carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub onto: bool,
    pub one_one: bool,
    pub bijective: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{onto: {}, one_one: {}, bijective: {}}}",
            self.onto, self.one_one, self.bijective
        )
    }
}

/// A total, single-valued σ-relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaFunction {
    relation: Relation,
}

impl SigmaFunction {
    /// Refines a relation into a function: every x ∈ A must have exactly one
    /// value.
    pub fn from_relation(relation: Relation) -> Result<Self, Error> {
        for x in relation.domain.iter() {
            let mut values = relation
                .graph
                .iter()
                .filter(|(gx, _)| gx == x)
                .map(|(_, y)| y);
            match (values.next(), values.next()) {
                (None, _) => return Err(Error::NotTotal(x.clone())),
                (Some(_), Some(_)) => return Err(Error::NotSingleValued(x.clone())),
                (Some(_), None) => {}
            }
        }
        Ok(SigmaFunction { relation })
    }

    pub fn new(
        domain: SigmaSet,
        codomain: SigmaSet,
        pairs: Vec<(Element, Element)>,
    ) -> Result<Self, Error> {
        Self::from_relation(Relation::new(domain, codomain, pairs)?)
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn domain(&self) -> &SigmaSet {
        &self.relation.domain
    }

    pub fn codomain(&self) -> &SigmaSet {
        &self.relation.codomain
    }

    pub fn graph(&self) -> &[(Element, Element)] {
        &self.relation.graph
    }

    /// The value f(x), if x lies in the domain carrier.
    pub fn apply(&self, x: &Element) -> Option<&Element> {
        self.relation
            .graph
            .iter()
            .find(|(gx, _)| gx == x)
            .map(|(_, y)| y)
    }

    /// The image f(A) = ran(f).
    pub fn image(&self) -> SigmaSet {
        self.relation.ran()
    }

    /// The preimage {x ∈ A : f(x) ∈ S}. With S = B this is the whole domain.
    pub fn preimage(&self, s: &SigmaSet) -> SigmaSet {
        SigmaSet::new(
            self.relation
                .graph
                .iter()
                .filter(|(_, y)| s.contains(y))
                .map(|(x, _)| x.clone())
                .collect(),
        )
        .expect("preimage members come from a carrier")
    }

    /// Onto, one-one and bijective flags.
    pub fn classify(&self) -> Classification {
        let ran = self.image();
        let onto = ran == self.relation.codomain;
        let one_one = ran.cardinality() == self.relation.domain.cardinality();
        Classification {
            onto,
            one_one,
            bijective: onto && one_one,
        }
    }

    /// Pointwise equality: same domain carrier and same values, codomain
    /// carriers ignored.
    pub fn eq_pointwise(&self, other: &SigmaFunction) -> bool {
        self.relation.domain == other.relation.domain && self.relation.graph == other.relation.graph
    }

    /// The σ-antifunction f*: x ↦ (f(x))*, satisfying {f(x)} ∪ {f*(x)} = ∅
    /// pointwise. The codomain carrier is the antiset of B when that exists,
    /// else the antiset of ran(f). Fails when some value has no antielement.
    pub fn antifunction(&self) -> Result<SigmaFunction, Error> {
        let codomain = match self.relation.codomain.antiset() {
            Ok(anti) => anti,
            Err(_) => self.image().antiset()?,
        };
        let graph = self
            .relation
            .graph
            .iter()
            .map(|(x, y)| match y.antielement() {
                Some(anti) => Ok((x.clone(), anti)),
                None => Err(Error::NoAntiset { blocker: y.clone() }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        SigmaFunction::new(self.relation.domain.clone(), codomain, graph)
    }

    /// Id_A: x ↦ x.
    pub fn identity(a: &SigmaSet) -> SigmaFunction {
        let graph = a.iter().map(|x| (x.clone(), x.clone())).collect();
        SigmaFunction::new(a.clone(), a.clone(), graph).expect("identity is a function")
    }

    /// Id*_A: x ↦ x*, from A onto its antiset.
    pub fn antidentity(a: &SigmaSet) -> Result<SigmaFunction, Error> {
        let antiset = a.antiset()?;
        let graph = a
            .iter()
            .map(|x| {
                let anti = x.antielement().expect("antiset implies antielements");
                (x.clone(), anti)
            })
            .collect();
        SigmaFunction::new(a.clone(), antiset, graph)
    }

    /// Composition f ∘ g on the restricted domain
    /// {x ∈ dom(g) : g(x) ∈ ran(g) ∩ dom(f)}. The intersection must be
    /// nonempty. Note the domain restriction: this composition is total on a
    /// carve-out of dom(g), not necessarily on all of it.
    pub fn compose(f: &SigmaFunction, g: &SigmaFunction) -> Result<SigmaFunction, Error> {
        if g.image().intersect(f.domain()).is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut graph = Vec::new();
        let mut domain = Vec::new();
        for (x, gx) in g.graph() {
            if let Some(fgx) = f.apply(gx) {
                domain.push(x.clone());
                graph.push((x.clone(), fgx.clone()));
            }
        }
        let domain = SigmaSet::new(domain).expect("restricted domain is a sigma-set");
        SigmaFunction::new(domain, f.codomain().clone(), graph)
    }

    /// The inverse of a bijection: the graph transpose.
    pub fn inverse(&self) -> Result<SigmaFunction, Error> {
        if !self.classify().bijective {
            return Err(Error::NotBijective);
        }
        let graph = self
            .relation
            .graph
            .iter()
            .map(|(x, y)| (y.clone(), x.clone()))
            .collect();
        SigmaFunction::new(
            self.relation.codomain.clone(),
            self.relation.domain.clone(),
            graph,
        )
    }

    /// The antinverse f_-1*: B* → A*, the unique function with
    /// f_-1*(f*(x)) = x* for all x ∈ A; constructed as (f*_-1)*.
    pub fn antinverse(&self) -> Result<SigmaFunction, Error> {
        if !self.classify().bijective {
            return Err(Error::NotBijective);
        }
        // Both carriers need antisets before the construction makes sense.
        self.relation.domain.antiset()?;
        self.relation.codomain.antiset()?;
        self.antifunction()?.inverse()?.antifunction()
    }
}

/// Functions print as their graph in canonical domain order.
impl fmt::Display for SigmaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.relation.graph.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x} -> {y}")?;
        }
        write!(f, "}}")
    }
}

/// The sixteen named σ-functions generated by one bijection f: A → B when
/// both A* and B* exist, with the verified composition identities as edges.
#[derive(Debug, Clone)]
pub struct FunctionDiagram {
    nodes: Vec<DiagramNode>,
    edges: Vec<CompositionEdge>,
}

#[derive(Debug, Clone)]
pub struct DiagramNode {
    pub label: &'static str,
    pub func: SigmaFunction,
}

/// A verified identity `then ∘ first = equals` among diagram nodes (indices
/// into the node list).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositionEdge {
    pub first: usize,
    pub then: usize,
    pub equals: usize,
}

/// Node labels in the canonical order.
pub const DIAGRAM_LABELS: [&str; 16] = [
    "f",
    "f_-1",
    "(f_-1)*",
    "(f_-1)*_-1",
    "f*",
    "f*_-1",
    "f_-1*",
    "(f_-1*)_-1",
    "Id_A",
    "Id_B",
    "Id_A*",
    "Id_B*",
    "Id*_A",
    "Id*_A*",
    "Id*_B",
    "Id*_B*",
];

impl FunctionDiagram {
    pub fn nodes(&self) -> &[DiagramNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CompositionEdge] {
        &self.edges
    }

    pub fn node(&self, label: &str) -> Option<&DiagramNode> {
        self.nodes.iter().find(|n| n.label == label)
    }
}

/// Builds the 16-function diagram for a bijection whose carriers both have
/// antisets, verifying every forced construction and composition identity
/// pointwise.
pub fn build_diagram(f: &SigmaFunction) -> Result<FunctionDiagram, Error> {
    if !f.classify().bijective {
        return Err(Error::NotBijective);
    }
    let a = f.domain().clone();
    let b = f.codomain().clone();
    let a_star = a.antiset()?;
    let b_star = b.antiset()?;

    let f_inv = f.inverse()?;
    let f_inv_anti = f_inv.antifunction()?;
    let f_inv_anti_inv = f_inv_anti.inverse()?;
    let f_anti = f.antifunction()?;
    let f_anti_inv = f_anti.inverse()?;
    let f_antinv = f.antinverse()?;
    let f_antinv_inv = f_antinv.inverse()?;

    let nodes = vec![
        f.clone(),
        f_inv.clone(),
        f_inv_anti.clone(),
        f_inv_anti_inv,
        f_anti.clone(),
        f_anti_inv,
        f_antinv.clone(),
        f_antinv_inv,
        SigmaFunction::identity(&a),
        SigmaFunction::identity(&b),
        SigmaFunction::identity(&a_star),
        SigmaFunction::identity(&b_star),
        SigmaFunction::antidentity(&a)?,
        SigmaFunction::antidentity(&a_star)?,
        SigmaFunction::antidentity(&b)?,
        SigmaFunction::antidentity(&b_star)?,
    ];

    // Forced construction identities.
    debug_assert!(f_antinv.eq_pointwise(&f_anti.inverse()?.antifunction()?));
    debug_assert!(f_inv_anti.eq_pointwise(&f.inverse()?.antifunction()?));

    // Composition identities; indices follow DIAGRAM_LABELS. On empty
    // carriers every node is the empty function and the identities hold
    // vacuously (the restricted composition itself needs a nonempty
    // range/domain overlap), so verification applies to nonempty f only.
    let candidate_edges = [
        (0usize, 1usize, 8usize), // f_-1 ∘ f = Id_A
        (1, 0, 9),                // f ∘ f_-1 = Id_B
        (0, 2, 12),               // (f_-1)* ∘ f = Id*_A
        (4, 6, 12),               // f_-1* ∘ f* = Id*_A
    ];
    let mut edges = Vec::new();
    for (first, then, equals) in candidate_edges {
        if !a.is_empty() {
            let composed = SigmaFunction::compose(&nodes[then], &nodes[first])?;
            debug_assert!(
                composed.eq_pointwise(&nodes[equals]),
                "diagram identity {} after {} = {} failed",
                DIAGRAM_LABELS[first],
                DIAGRAM_LABELS[then],
                DIAGRAM_LABELS[equals]
            );
        }
        edges.push(CompositionEdge {
            first,
            then,
            equals,
        });
    }

    let nodes = DIAGRAM_LABELS
        .iter()
        .zip(nodes)
        .map(|(label, func)| DiagramNode { label, func })
        .collect();
    Ok(FunctionDiagram { nodes, edges })
}

/// Every function between two carriers, in a fixed enumeration order.
/// There are |B|^|A| of them (one empty function when A is empty, none when
/// only B is).
pub fn all_functions(a: &SigmaSet, b: &SigmaSet) -> Vec<SigmaFunction> {
    let dom: Vec<&Element> = a.iter().collect();
    let cod: Vec<&Element> = b.iter().collect();
    if dom.is_empty() {
        return vec![
            SigmaFunction::new(a.clone(), b.clone(), Vec::new()).expect("empty function"),
        ];
    }
    if cod.is_empty() {
        return Vec::new();
    }
    let total = cod
        .len()
        .checked_pow(dom.len() as u32)
        .expect("function space too large");
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0usize; dom.len()];
    for _ in 0..total {
        let graph = dom
            .iter()
            .zip(&digits)
            .map(|(x, &d)| ((*x).clone(), cod[d].clone()))
            .collect();
        out.push(SigmaFunction::new(a.clone(), b.clone(), graph).expect("assignment is a function"));
        for d in digits.iter_mut() {
            *d += 1;
            if *d < cod.len() {
                break;
            }
            *d = 0;
        }
    }
    out
}
