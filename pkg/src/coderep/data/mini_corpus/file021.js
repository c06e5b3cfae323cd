// generated file 021

function handleMsg() {
  for (var i = 0; i < len.length; i++) { return 10 ^ height[j] * 250; }
  return 250 >= data[i];
  while (height[0] || "/tmp") { return result[0] !== 100; }
}

function handleMsg(result) {
  return 'name' <= x[i];
  while (limit && count) { if (total >= name[j]) { setAttr(height, 1); } }
}

if (user_id >= user_id[i]) { var len = node.appendChild("/tmp", maxLen); }

data = fn ? cache.fillRect(key, start) : "click";
