//! The JSON network document accepted by every subcommand.
//!
//! Two shapes are recognised:
//!
//! * a general network: `nodes`, `links` (each with `from`, `to`, `alpha`,
//!   `beta`, optional `external_flow`, and a `role` out of AB/BD/AC/CD/BC),
//!   `origin` and `destination` — reduced to the four-node form first;
//! * a pre-reduced configuration: `four_node` with `alpha` and `beta`
//!   arrays, either five entries (bridge at index 3) or four entries
//!   (links 1, 2, 4, 5 of a bridgeless network).

use braess::{reduce_network, FourNodeConfig, GeneralNetwork, Link, Role};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct RawDocument {
    #[serde(default)]
    pub nodes: Option<Vec<String>>,
    #[serde(default)]
    pub links: Option<Vec<RawLink>>,
    #[serde(default)]
    pub origin: Option<String>,
    #[serde(default)]
    pub destination: Option<String>,
    #[serde(default)]
    pub four_node: Option<RawFourNode>,
}

#[derive(Debug, Deserialize)]
pub struct RawLink {
    pub from: String,
    pub to: String,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default)]
    pub external_flow: f64,
    pub role: String,
}

#[derive(Debug, Deserialize)]
pub struct RawFourNode {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

/// A parsed input: either a general network still to be reduced, or a
/// ready four-node configuration.
#[derive(Debug)]
pub enum Document {
    General(GeneralNetwork),
    FourNode { cfg: FourNodeConfig, has_bc: bool },
}

/// Schema-level failure: malformed JSON or invalid field values.
#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_role(role: &str) -> Result<Role, ParseError> {
    match role {
        "AB" => Ok(Role::Ab),
        "BD" => Ok(Role::Bd),
        "AC" => Ok(Role::Ac),
        "CD" => Ok(Role::Cd),
        "BC" => Ok(Role::Bc),
        other => Err(ParseError(format!(
            "unknown link role {other:?} (expected AB, BD, AC, CD or BC)"
        ))),
    }
}

fn check_nonnegative(name: &str, value: f64) -> Result<(), ParseError> {
    if !value.is_finite() || value < 0.0 {
        return Err(ParseError(format!(
            "{name} must be a finite nonnegative number, got {value}"
        )));
    }
    Ok(())
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;

    if let Some(four) = raw.four_node {
        let (alpha, beta) = (four.alpha, four.beta);
        if alpha.len() != beta.len() || !(alpha.len() == 4 || alpha.len() == 5) {
            return Err(ParseError(format!(
                "four_node arrays must both have 5 entries (with bridge) or 4 (without), \
                 got {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        for (i, (&a, &b)) in alpha.iter().zip(beta.iter()).enumerate() {
            check_nonnegative(&format!("four_node.alpha[{i}]"), a)?;
            check_nonnegative(&format!("four_node.beta[{i}]"), b)?;
        }
        let has_bc = alpha.len() == 5;
        let cfg = if has_bc {
            FourNodeConfig::new(
                [alpha[0], alpha[1], alpha[2], alpha[3], alpha[4]],
                [beta[0], beta[1], beta[2], beta[3], beta[4]],
            )
        } else {
            FourNodeConfig::new(
                [alpha[0], alpha[1], 0.0, alpha[2], alpha[3]],
                [beta[0], beta[1], 0.0, beta[2], beta[3]],
            )
        };
        return Ok(Document::FourNode { cfg, has_bc });
    }

    let (Some(nodes), Some(links), Some(origin), Some(destination)) =
        (raw.nodes, raw.links, raw.origin, raw.destination)
    else {
        return Err(ParseError(
            "document must contain either \"four_node\" or all of \"nodes\", \"links\", \
             \"origin\" and \"destination\""
                .into(),
        ));
    };

    let mut parsed = Vec::with_capacity(links.len());
    for (i, l) in links.iter().enumerate() {
        check_nonnegative(&format!("links[{i}].alpha"), l.alpha)?;
        check_nonnegative(&format!("links[{i}].beta"), l.beta)?;
        check_nonnegative(&format!("links[{i}].external_flow"), l.external_flow)?;
        parsed.push(Link {
            from: l.from.clone(),
            to: l.to.clone(),
            alpha: l.alpha,
            beta: l.beta,
            external_flow: l.external_flow,
            role: parse_role(&l.role)?,
        });
    }

    Ok(Document::General(GeneralNetwork {
        nodes,
        links: parsed,
        origin,
        destination,
    }))
}

impl Document {
    /// The four-node configuration this document denotes, reducing first
    /// when necessary.
    pub fn to_config(&self) -> braess::Result<(FourNodeConfig, bool)> {
        match self {
            Document::General(net) => reduce_network(net),
            Document::FourNode { cfg, has_bc } => Ok((*cfg, *has_bc)),
        }
    }
}
