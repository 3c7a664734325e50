"""Domain packages: algebra kernel, catalog, formulas, capability and the Hopf oracle."""
