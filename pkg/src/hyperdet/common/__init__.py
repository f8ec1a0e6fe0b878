# common: config, observability
