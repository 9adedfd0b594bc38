# Relative Invariants - Source Package
