# Max Genus
