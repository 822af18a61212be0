/// Size limits for the exhaustive procedures. Exceeding one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    /// Atoms enumerated by the valuation search.
    pub max_atoms: usize,
    /// Issues in one agenda.
    pub max_issues: usize,
    /// Agents in one profile.
    pub max_agents: usize,
    /// Issues accepted by the agenda-structure report (subset search is 3^m).
    pub max_report_issues: usize,
    /// Agents searched by the nearest-profile rule.
    pub full_max_agents: usize,
    /// Codomain size searched by the nearest-profile rule.
    pub full_max_codomain: usize,
    /// Issues and agents for the restricted-domain order search.
    pub domain_max_issues: usize,
    pub domain_max_agents: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_atoms: 20,
            max_issues: 24,
            max_agents: 10_000,
            max_report_issues: 12,
            full_max_agents: 5,
            full_max_codomain: 16,
            domain_max_issues: 8,
            domain_max_agents: 8,
        }
    }
}

impl Caps {
    pub const NAMES: [&'static str; 8] = [
        "max_atoms",
        "max_issues",
        "max_agents",
        "max_report_issues",
        "full_max_agents",
        "full_max_codomain",
        "domain_max_issues",
        "domain_max_agents",
    ];

    /// Sets a cap by field name; dashes are read as underscores.
    pub fn set(&mut self, name: &str, value: usize) -> crate::Result<()> {
        let slot = match name.replace('-', "_").as_str() {
            "max_atoms" => &mut self.max_atoms,
            "max_issues" => &mut self.max_issues,
            "max_agents" => &mut self.max_agents,
            "max_report_issues" => &mut self.max_report_issues,
            "full_max_agents" => &mut self.full_max_agents,
            "full_max_codomain" => &mut self.full_max_codomain,
            "domain_max_issues" => &mut self.domain_max_issues,
            "domain_max_agents" => &mut self.domain_max_agents,
            _ => {
                return Err(crate::Error::input(format!(
                    "unknown cap `{name}` (expected one of: {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_by_name() {
        let mut c = Caps::default();
        for (i, name) in Caps::NAMES.iter().enumerate() {
            c.set(name, 100 + i).unwrap();
        }
        assert_eq!(c.max_atoms, 100);
        assert_eq!(c.domain_max_agents, 107);
        c.set("full-max-agents", 2).unwrap();
        assert_eq!(c.full_max_agents, 2);
        assert!(c.set("max_widgets", 1).is_err());
    }
}
