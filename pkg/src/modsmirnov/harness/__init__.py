"""Instance generators, campaigns, reports and the command line."""
