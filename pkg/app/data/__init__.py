# Data package for the reference scenarios
