# file package
