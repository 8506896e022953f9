# Tests for rift_workbench.candidates
