# Schema modules
