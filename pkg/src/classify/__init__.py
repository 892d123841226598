# classify package
