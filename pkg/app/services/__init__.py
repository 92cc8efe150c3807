# Empty init file for services package
