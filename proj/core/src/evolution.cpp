namespace fraclab {}
