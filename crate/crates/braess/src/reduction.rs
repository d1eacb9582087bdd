//! Reduction of a generalised network to the canonical four-node form.
//!
//! A generalised network replaces each of the five canonical links by a
//! directed path of arbitrary length, and optionally routes a fixed amount
//! of external traffic over individual links. Reduction happens in two
//! mechanical steps, both of which preserve linearity of the travel-time
//! functions:
//!
//! 1. *absorb* external flow: a link with cost `alpha + beta * (f + ext)`
//!    seen by the internal flow `f` is the link `(alpha + beta * ext) + beta * f`;
//! 2. *contract* each role path: links sharing one internal flow add up,
//!    `alpha_P = sum(alpha)`, `beta_P = sum(beta)`.

use std::collections::HashMap;

use crate::config::FourNodeConfig;
use crate::error::{Error, Result};

/// The role a link plays in the five-path decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Part of the path from the origin to the top node `b`.
    Ab,
    /// Part of the path from `b` to the destination.
    Bd,
    /// Part of the path from the origin to the bottom node `c`.
    Ac,
    /// Part of the path from `c` to the destination.
    Cd,
    /// Part of the bridge path from `b` to `c` (optional).
    Bc,
}

impl Role {
    pub const ALL: [Role; 5] = [Role::Ab, Role::Bd, Role::Ac, Role::Cd, Role::Bc];

    pub fn name(self) -> &'static str {
        match self {
            Role::Ab => "AB",
            Role::Bd => "BD",
            Role::Ac => "AC",
            Role::Cd => "CD",
            Role::Bc => "BC",
        }
    }

    /// 1-based canonical link index this role contracts into.
    fn link_index(self) -> usize {
        match self {
            Role::Ab => 1,
            Role::Bd => 2,
            Role::Bc => 3,
            Role::Ac => 4,
            Role::Cd => 5,
        }
    }
}

/// One directed link of a generalised network.
#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub from: String,
    pub to: String,
    pub alpha: f64,
    pub beta: f64,
    /// Fixed traffic entering from outside the network on this link only.
    pub external_flow: f64,
    pub role: Role,
}

/// A generalised network: a directed graph whose links are each assigned to
/// exactly one of the five roles.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralNetwork {
    pub nodes: Vec<String>,
    pub links: Vec<Link>,
    pub origin: String,
    pub destination: String,
}

/// Folds a fixed external flow into the free-flow travel time:
/// `alpha + beta * (f + ext) = (alpha + beta * ext) + beta * f`.
pub fn absorb_external_flow(alpha: f64, beta: f64, external_flow: f64) -> f64 {
    alpha + beta * external_flow
}

/// Contracts a chain of links into a single equivalent link by summing the
/// (already absorbed) free-flow times and the delay parameters. The links
/// may be given in any order; they must form one simple directed path.
pub fn contract_path(links: &[(&str, &str, f64, f64)]) -> Result<(f64, f64)> {
    let order = chain_order(
        &links
            .iter()
            .map(|&(f, t, _, _)| (f.to_string(), t.to_string()))
            .collect::<Vec<_>>(),
        "path",
    )?;
    let alpha = order.iter().map(|&i| links[i].2).sum();
    let beta = order.iter().map(|&i| links[i].3).sum();
    Ok((alpha, beta))
}

/// Orders links into a simple head-to-tail chain, returning their indices in
/// walk order, or `BrokenPath` when they branch, cycle or disconnect.
fn chain_order(edges: &[(String, String)], what: &str) -> Result<Vec<usize>> {
    if edges.is_empty() {
        return Err(Error::BrokenPath(format!("{what} has no links")));
    }
    let mut by_from: HashMap<&str, usize> = HashMap::new();
    for (i, (from, _)) in edges.iter().enumerate() {
        if by_from.insert(from.as_str(), i).is_some() {
            return Err(Error::BrokenPath(format!(
                "{what} branches at node '{from}'"
            )));
        }
    }
    let mut entered = HashMap::new();
    for (i, (_, to)) in edges.iter().enumerate() {
        if entered.insert(to.as_str(), i).is_some() {
            return Err(Error::BrokenPath(format!("{what} merges at node '{to}'")));
        }
    }
    // The head is the unique tail node that no link enters.
    let mut heads = edges
        .iter()
        .map(|(from, _)| from.as_str())
        .filter(|from| !entered.contains_key(from));
    let head = heads
        .next()
        .ok_or_else(|| Error::BrokenPath(format!("{what} contains a cycle")))?;
    if heads.next().is_some() {
        return Err(Error::BrokenPath(format!("{what} is disconnected")));
    }

    let mut order = Vec::with_capacity(edges.len());
    let mut node = head;
    while let Some(&i) = by_from.get(node) {
        order.push(i);
        node = edges[i].1.as_str();
    }
    if order.len() != edges.len() {
        return Err(Error::BrokenPath(format!("{what} is disconnected")));
    }
    Ok(order)
}

/// Reduces a generalised network to a [`FourNodeConfig`], absorbing external
/// flows and contracting each role path. Returns the configuration and
/// whether a bridge path is present; for bridgeless networks the link-3
/// parameters are left at zero.
pub fn reduce_network(net: &GeneralNetwork) -> Result<(FourNodeConfig, bool)> {
    for link in &net.links {
        for (name, v) in [
            ("alpha", link.alpha),
            ("beta", link.beta),
            ("external_flow", link.external_flow),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "link {} -> {}: {name} must be finite and nonnegative, got {v}",
                    link.from, link.to
                )));
            }
        }
        if !net.nodes.is_empty() {
            for node in [&link.from, &link.to] {
                if !net.nodes.contains(node) {
                    return Err(Error::Topology(format!(
                        "link {} -> {} references undeclared node '{node}'",
                        link.from, link.to
                    )));
                }
            }
        }
    }

    let mut endpoints: HashMap<Role, (String, String)> = HashMap::new();
    let mut alpha = [0.0_f64; 5];
    let mut beta = [0.0_f64; 5];

    for role in Role::ALL {
        let members: Vec<&Link> = net.links.iter().filter(|l| l.role == role).collect();
        if members.is_empty() {
            if role == Role::Bc {
                continue;
            }
            return Err(Error::Topology(format!("role {} is missing", role.name())));
        }
        let edges: Vec<(String, String)> = members
            .iter()
            .map(|l| (l.from.clone(), l.to.clone()))
            .collect();
        let order = chain_order(&edges, role.name()).map_err(|e| match e {
            Error::BrokenPath(msg) => Error::Topology(msg),
            other => other,
        })?;

        let k = role.link_index() - 1;
        for &i in &order {
            let l = members[i];
            alpha[k] += absorb_external_flow(l.alpha, l.beta, l.external_flow);
            beta[k] += l.beta;
        }
        let start = edges[order[0]].0.clone();
        let end = edges[*order.last().unwrap()].1.clone();
        endpoints.insert(role, (start, end));
    }

    // Endpoint consistency: both outgoing roles start at the origin, both
    // incoming roles end at the destination, and the roles agree on which
    // nodes play b and c.
    let ep = |r: Role| endpoints.get(&r).unwrap();
    let check = |cond: bool, msg: String| -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::Topology(msg))
        }
    };
    check(
        ep(Role::Ab).0 == net.origin,
        format!("role AB must start at origin '{}'", net.origin),
    )?;
    check(
        ep(Role::Ac).0 == net.origin,
        format!("role AC must start at origin '{}'", net.origin),
    )?;
    check(
        ep(Role::Bd).1 == net.destination,
        format!("role BD must end at destination '{}'", net.destination),
    )?;
    check(
        ep(Role::Cd).1 == net.destination,
        format!("role CD must end at destination '{}'", net.destination),
    )?;
    let b_node = &ep(Role::Ab).1;
    let c_node = &ep(Role::Ac).1;
    check(
        &ep(Role::Bd).0 == b_node,
        format!(
            "roles AB and BD disagree on node b ('{b_node}' vs '{}')",
            ep(Role::Bd).0
        ),
    )?;
    check(
        &ep(Role::Cd).0 == c_node,
        format!(
            "roles AC and CD disagree on node c ('{c_node}' vs '{}')",
            ep(Role::Cd).0
        ),
    )?;

    let has_bc = endpoints.contains_key(&Role::Bc);
    if has_bc {
        check(
            &ep(Role::Bc).0 == b_node,
            format!("role BC must start at node b ('{b_node}')"),
        )?;
        check(
            &ep(Role::Bc).1 == c_node,
            format!("role BC must end at node c ('{c_node}')"),
        )?;
    }

    Ok((FourNodeConfig::new(alpha, beta), has_bc))
}
