# Core model and analysis
