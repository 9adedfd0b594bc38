# Relative invariants toolkit - Tests Package
