# task package
