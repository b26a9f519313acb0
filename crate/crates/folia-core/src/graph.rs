//! Data model for decorated leaf-space graphs.
//!
//! A [`FoliationGraph`] abstracts a singular codimension-one foliation of an
//! n-manifold whose singularities are non-degenerate tangency points (centers
//! and saddles), stable circle components, or opaque Novikov-type regions.
//! Nodes are the exceptional events of the leaf space; edges are maximal
//! one-parameter families of mutually diffeomorphic regular leaves. Singular
//! leaves are owned by their saddle node (a saddle's separatrices live in its
//! port decoration), so two saddle nodes can never share a leaf: the model is
//! saddle-connection-free by construction.

/// Node identifier. Identifiers are plain strings so that authored files,
/// ingested meshes and surgically created nodes share one namespace.
pub type NodeId = String;

/// Edge (leaf family) identifier.
pub type EdgeId = String;

/// Topological type of a regular leaf (every leaf of a family is diffeomorphic
/// to the family's label).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeafTopology {
    /// The m-sphere S^m.
    Sphere(u32),
    /// The circle; the generic leaf label on surfaces (n = 2).
    Circle,
    /// The 2-torus; the generic non-sphere compact leaf in 3-manifolds.
    Torus,
    /// The product S^l x S^m.
    ProductSpheres(u32, u32),
    /// Boundary leaf of a middle-index saddle region: B^l x S^{n-l-1} glued to
    /// the separatrix sphere along its boundary.
    GluedProduct(u32),
    /// The quotient S^{n-1}/S^{l-1} (separatrix sphere with a collapsed
    /// subsphere), the singular-level shape next to a middle-index saddle.
    WedgeQuotient(u32),
    /// The compact cylinder-type leaf S^1 x S^m (m = n-2 in an n-manifold).
    CylinderS1xS(u32),
    /// The open leaf R x S^m (m = n-2); the only built-in non-compact label.
    OpenRxS(u32),
    /// A leaf obtained from `base` by index-`l` surgery; created by saddle-pair
    /// creation, which stores the base so elimination can restore it exactly.
    Surgered(Box<LeafTopology>, u32),
    /// Authored escape hatch: symbolic name, compactness flag, optional Euler
    /// characteristic.
    Custom {
        name: String,
        compact: bool,
        euler_characteristic: Option<i64>,
    },
}

impl LeafTopology {
    /// The generic sphere label in an n-manifold: `Circle` when n = 2,
    /// `Sphere(n-1)` otherwise.
    pub fn sphere_label(dimension: u32) -> LeafTopology {
        if dimension == 2 {
            LeafTopology::Circle
        } else {
            LeafTopology::Sphere(dimension - 1)
        }
    }

    /// Whether leaves of this type are compact.
    pub fn is_compact(&self) -> bool {
        match self {
            LeafTopology::OpenRxS(_) => false,
            LeafTopology::Custom { compact, .. } => *compact,
            LeafTopology::Surgered(base, _) => base.is_compact(),
            _ => true,
        }
    }

    /// Euler characteristic when it is determined by the label.
    pub fn euler_characteristic(&self) -> Option<i64> {
        fn chi_sphere(m: u32) -> i64 {
            if m.is_multiple_of(2) {
                2
            } else {
                0
            }
        }
        match self {
            LeafTopology::Sphere(m) => Some(chi_sphere(*m)),
            LeafTopology::Circle => Some(0),
            LeafTopology::Torus => Some(0),
            LeafTopology::ProductSpheres(l, m) => Some(chi_sphere(*l) * chi_sphere(*m)),
            LeafTopology::CylinderS1xS(_) => Some(0),
            LeafTopology::Custom {
                euler_characteristic,
                ..
            } => *euler_characteristic,
            _ => None,
        }
    }
}

/// Germ classes of the holonomy of a marked leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HolonomyLabel {
    /// Trivial holonomy; the leaf has a product neighborhood.
    Trivial,
    /// Order-two one-sided holonomy; only possible when the foliation is not
    /// transversely orientable.
    Z2,
    /// Non-trivial germ on exactly one side, trivial on the other.
    Unilateral,
    /// Infinite holonomy group (non-trivial on both sides).
    Infinite,
}

/// Semi-holonomy data of a self-connected saddle: the germs of the return maps
/// along the separatrix loop, one per side. `minus_trivial` refers to the side
/// of the saddle's odd-sign (non-paired) port; it decides whether the leaves
/// just beyond the singular leaf are compact (S^1 x S^{n-2}) or open
/// (R x S^{n-2}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemiHolonomy {
    pub minus_trivial: bool,
    /// Germ on the paired side, when the author distinguishes it.
    pub plus_trivial: Option<bool>,
}

/// Side of a saddle's local first integral a port opens onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortSign {
    Minus,
    Plus,
}

impl PortSign {
    pub fn flipped(self) -> PortSign {
        match self {
            PortSign::Minus => PortSign::Plus,
            PortSign::Plus => PortSign::Minus,
        }
    }
}

/// Attachment of a leaf family to a saddle. A saddle of index 2..=n-2 has two
/// ports (one per sign); a saddle of index 1 or n-1 has three, the doubled
/// sign carrying the two separatrix sheets. On a self-connected saddle the two
/// same-sign ports carry the pairing mark and may attach to one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Port {
    pub sign: PortSign,
    pub edge: EdgeId,
    pub paired: bool,
}

impl Port {
    pub fn new(sign: PortSign, edge: impl Into<EdgeId>) -> Port {
        Port {
            sign,
            edge: edge.into(),
            paired: false,
        }
    }

    pub fn paired(sign: PortSign, edge: impl Into<EdgeId>) -> Port {
        Port {
            sign,
            edge: edge.into(),
            paired: true,
        }
    }
}

/// Saddle decoration: Morse index and separatrix structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Saddle {
    /// Morse index, in 1..=n-1.
    pub index: u32,
    /// Whether the two separatrix sheets belong to a single leaf returning to
    /// the saddle (possible only for index 1 or n-1).
    pub selfconnected: bool,
    /// Present exactly when `selfconnected`.
    pub semi_holonomy: Option<SemiHolonomy>,
    pub ports: Vec<Port>,
}

/// What a node of the leaf-space graph stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// Extremum tangency point (Morse index 0 or n).
    Center,
    /// Saddle tangency point.
    Saddle(Saddle),
    /// Stable circle component of the singular set.
    StableCircle,
    /// A distinguished regular leaf, recorded for its topology or holonomy.
    MarkedLeaf {
        topology: LeafTopology,
        holonomy: HolonomyLabel,
        /// Author acknowledgment that a unilateral leaf's accumulation side is
        /// not modelled in this graph.
        unresolved_boundary: bool,
    },
    /// Opaque region foliated with non-compact leaves (Reeb-component-like);
    /// the graph does not look inside it.
    Novikov,
    /// Boundary component tangent to the foliation (only in non-closed
    /// manifolds).
    BoundaryTangent,
}

/// A node of the leaf-space graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
}

/// A maximal one-parameter family of mutually diffeomorphic regular leaves.
/// When the graph is transversely orientable, `from -> to` is the direction of
/// the transverse field; otherwise the direction is ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafFamily {
    pub id: EdgeId,
    pub from: NodeId,
    pub to: NodeId,
    pub topology: LeafTopology,
    /// Marks the family joining a saddle pair of consecutive indices that can
    /// be cancelled against each other.
    pub strong_connection: bool,
}

impl LeafFamily {
    pub fn new(
        id: impl Into<EdgeId>,
        from: impl Into<NodeId>,
        to: impl Into<NodeId>,
        topology: LeafTopology,
    ) -> LeafFamily {
        LeafFamily {
            id: id.into(),
            from: from.into(),
            to: to.into(),
            topology,
            strong_connection: false,
        }
    }

    /// The endpoint other than `id`, for non-loop edges; for a loop returns
    /// `id` itself.
    pub fn other_endpoint(&self, id: &str) -> &NodeId {
        if self.from == id {
            &self.to
        } else {
            &self.from
        }
    }

    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }

    pub fn touches(&self, id: &str) -> bool {
        self.from == id || self.to == id
    }
}

/// Decorated leaf-space graph of a singular codimension-one foliation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationGraph {
    /// Ambient manifold dimension n >= 2.
    pub dimension: u32,
    /// Whether the ambient manifold is closed (forbids boundary-tangent
    /// nodes when true).
    pub closed: bool,
    /// Whether the foliation is transversely orientable (equivalently, defined
    /// by an integrable one-form).
    pub transversely_orientable: bool,
    /// Author-supplied flag: some closed transversal is null-homotopic.
    pub has_null_homotopic_transversal: bool,
    pub nodes: Vec<Node>,
    pub edges: Vec<LeafFamily>,
}

impl FoliationGraph {
    /// An empty graph of the given dimension (closed, transversely orientable).
    pub fn new(dimension: u32) -> FoliationGraph {
        FoliationGraph {
            dimension,
            closed: true,
            transversely_orientable: true,
            has_null_homotopic_transversal: false,
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&LeafFamily> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Edges incident to a node, in stored order (loops listed once).
    pub fn incident_edges(&self, id: &str) -> Vec<&LeafFamily> {
        self.edges.iter().filter(|e| e.touches(id)).collect()
    }

    /// Number of edge endpoints at the node (loops count twice).
    pub fn degree(&self, id: &str) -> usize {
        self.edges
            .iter()
            .map(|e| (e.from == id) as usize + (e.to == id) as usize)
            .sum()
    }

    pub fn add_node(&mut self, id: impl Into<NodeId>, kind: NodeKind) -> &mut Self {
        self.nodes.push(Node {
            id: id.into(),
            kind,
        });
        self
    }

    pub fn add_edge(&mut self, edge: LeafFamily) -> &mut Self {
        self.edges.push(edge);
        self
    }

    /// Smallest unused id of the form `{prefix}{k}` with k numeric, counting
    /// both node and edge namespaces so rewrites never collide.
    pub fn fresh_id(&self, prefix: &str) -> String {
        let next = self
            .nodes
            .iter()
            .map(|n| n.id.as_str())
            .chain(self.edges.iter().map(|e| e.id.as_str()))
            .filter_map(|id| id.strip_prefix(prefix))
            .filter_map(|rest| rest.parse::<u64>().ok())
            .max()
            .map_or(0, |m| m + 1);
        format!("{prefix}{next}")
    }

    /// A batch of distinct fresh identifiers sharing one prefix.
    pub fn fresh_ids(&self, prefix: &str, count: usize) -> Vec<String> {
        let first = self.fresh_id(prefix);
        let base: u64 = first[prefix.len()..].parse().expect("numeric suffix");
        (0..count as u64)
            .map(|i| format!("{prefix}{}", base + i))
            .collect()
    }

    /// The saddle decoration of a node, if it is a saddle.
    pub fn saddle(&self, id: &str) -> Option<&Saddle> {
        match self.node(id).map(|n| &n.kind) {
            Some(NodeKind::Saddle(s)) => Some(s),
            _ => None,
        }
    }
}
