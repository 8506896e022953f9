# Tests for rift_workbench.campaign
