"""Utils module for the Koszul homology workbench."""
