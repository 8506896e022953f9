# Tests for rift_workbench.sensitivity
