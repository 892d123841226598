# complex package
