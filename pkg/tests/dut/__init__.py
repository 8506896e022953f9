# Tests for rift_workbench.dut
